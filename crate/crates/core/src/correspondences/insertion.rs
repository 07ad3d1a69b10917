//! Schensted row insertion and its reverse, shared by RS and RSK.

use crate::partitions::YoungDiagram;

/// Inserts `x` into `rows`, bumping the leftmost entry strictly greater than
/// the inserted value in each row. Returns the row where a cell was created.
pub(crate) fn row_insert<T: Ord + Copy>(rows: &mut Vec<Vec<T>>, mut x: T) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&e| e <= x);
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Removes the last cell of row `r` and reverse-bumps it out of the top row.
/// Each step replaces the rightmost entry strictly smaller than the carried
/// value.
pub(crate) fn reverse_bump<T: Ord + Copy>(rows: &mut Vec<Vec<T>>, r: usize) -> T {
    let mut x = rows[r].pop().expect("row is nonempty");
    if rows[r].is_empty() {
        debug_assert_eq!(r + 1, rows.len());
        rows.pop();
    }
    for row in rows[..r].iter_mut().rev() {
        let pos = row.partition_point(|&e| e < x);
        debug_assert!(pos > 0);
        x = std::mem::replace(&mut row[pos - 1], x);
    }
    x
}

/// Shape of the insertion tableau of `word`, without recording.
pub fn insertion_shape<T: Ord + Copy>(word: impl IntoIterator<Item = T>) -> YoungDiagram {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for x in word {
        row_insert(&mut rows, x);
    }
    YoungDiagram::new(rows.iter().map(|r| r.len() as u32).collect()).expect("insertion shape")
}

/// Length of the longest strictly increasing subsequence by patience sorting.
pub fn longest_increasing_subsequence<T: Ord + Copy>(word: &[T]) -> usize {
    let mut piles: Vec<T> = Vec::new();
    for &x in word {
        let pos = piles.partition_point(|&p| p < x);
        if pos == piles.len() {
            piles.push(x);
        } else {
            piles[pos] = x;
        }
    }
    piles.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_then_reverse() {
        let mut rows = Vec::new();
        let word = [3, 1, 2, 2, 1];
        let created: Vec<usize> = word.iter().map(|&x| row_insert(&mut rows, x)).collect();
        assert_eq!(rows, vec![vec![1, 1, 2], vec![2], vec![3]]);
        let mut out = Vec::new();
        for &r in created.iter().rev() {
            out.push(reverse_bump(&mut rows, r));
        }
        out.reverse();
        assert_eq!(out, word);
        assert!(rows.is_empty());
    }

    #[test]
    fn lis_examples() {
        assert_eq!(longest_increasing_subsequence::<u32>(&[]), 0);
        assert_eq!(longest_increasing_subsequence(&[4, 6, 5, 3, 7]), 3);
        assert_eq!(longest_increasing_subsequence(&[1, 2, 3]), 3);
        assert_eq!(longest_increasing_subsequence(&[3, 2, 1]), 1);
    }
}
