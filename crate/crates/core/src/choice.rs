//! Mixed-radix enumeration of choice functions `f: J → ∏ I_j`.

use crate::error::{Error, Result};

/// Number of choice functions, saturating.
pub fn choice_count(sizes: &[usize]) -> u128 {
    sizes.iter().fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}

pub fn check_expansion(sizes: &[usize], limit: u64) -> Result<u128> {
    let size = choice_count(sizes);
    if size > limit as u128 {
        Err(Error::ExpansionTooLarge { size, limit })
    } else {
        Ok(size)
    }
}

/// Calls `f` once per choice function, in lexicographic order. Nothing is
/// called when some `I_j` is empty; exactly once when `sizes` is empty.
pub fn for_each_choice(sizes: &[usize], mut f: impl FnMut(&[usize])) {
    if sizes.contains(&0) {
        return;
    }
    let mut digits = vec![0usize; sizes.len()];
    loop {
        f(&digits);
        let mut pos = sizes.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < sizes[pos] {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        for sizes in [vec![], vec![3], vec![2, 3], vec![1, 4, 2], vec![2, 0, 3]] {
            let mut seen = Vec::new();
            for_each_choice(&sizes, |d| seen.push(d.to_vec()));
            assert_eq!(seen.len() as u128, choice_count(&sizes));
            let mut sorted = seen.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, seen);
        }
    }

    #[test]
    fn expansion_limit() {
        assert!(check_expansion(&[10, 10, 10], 1000).is_ok());
        assert_eq!(
            check_expansion(&[10, 10, 11], 1000),
            Err(Error::ExpansionTooLarge { size: 1100, limit: 1000 })
        );
    }
}
