//! Enumeration of Hall basis monomials of a fixed degree.

use super::element::LieMonomial;
use super::normal::{is_lyndon, standard_factorization};
use super::symbols::{GeneratorSymbol, Letter};
use crate::error::{domain, HhopError, Result};

/// Bracketing of a Lyndon word over `letters` (indices into the slice).
fn lyndon_tree(word: &[usize], letters: &[Letter]) -> LieMonomial {
    if word.len() == 1 {
        return LieMonomial::Leaf(letters[word[0]].clone());
    }
    let (u, v) = standard_factorization(word);
    LieMonomial::bracket(lyndon_tree(u, letters), lyndon_tree(v, letters))
}

/// Hall monomials on the given letters of exactly `degree`, with at most
/// `max_weight` leaves, optionally capped in count.
///
/// `letters` need not be sorted. The result is sorted by monomial order.
pub fn hall_monomials(
    letters: &[Letter],
    degree: u32,
    max_weight: usize,
    max_count: Option<usize>,
) -> Result<Vec<LieMonomial>> {
    let mut sorted: Vec<Letter> = letters.to_vec();
    sorted.sort();
    sorted.dedup();
    let degs: Vec<u32> = sorted.iter().map(|l| l.degree()).collect();
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let cap = max_count.unwrap_or(usize::MAX);
    lyndon_search(&degs, degree, max_weight, &mut current, &mut words, cap)?;
    let mut out: Vec<LieMonomial> = words.iter().map(|w| lyndon_tree(w, &sorted)).collect();
    if degree.is_multiple_of(2) && max_weight >= 2 {
        let half = degree / 2;
        if half % 2 == 1 {
            let mut halves = Vec::new();
            let mut cur = Vec::new();
            lyndon_search(&degs, half, max_weight / 2, &mut cur, &mut halves, cap)?;
            for h in halves {
                let t = lyndon_tree(&h, &sorted);
                out.push(LieMonomial::bracket(t.clone(), t));
                if out.len() > cap {
                    return Err(bound_error(cap));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn bound_error(cap: usize) -> HhopError {
    HhopError::Bound(format!("more than {cap} Hall monomials"))
}

fn lyndon_search(
    degs: &[u32],
    remaining: u32,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if remaining == 0 {
        if is_lyndon(current) {
            out.push(current.clone());
            if out.len() > cap {
                return Err(bound_error(cap));
            }
        }
        return Ok(());
    }
    if current.len() >= max_len {
        return Ok(());
    }
    // A Lyndon word starts with its least letter, so later letters are >= the first.
    let start = current.first().copied().unwrap_or(0);
    for (i, &d) in degs.iter().enumerate().skip(start) {
        if d > remaining {
            continue;
        }
        if current.first() == Some(&i) && remaining == d {
            // A word of length >= 2 ending in its first letter is not Lyndon.
            continue;
        }
        current.push(i);
        lyndon_search(degs, remaining - d, max_len, current, out, cap)?;
        current.pop();
    }
    Ok(())
}

/// Hall basis of the free graded Lie algebra on `generators` in reduced
/// degree `target`, restricted to monomials of weight at most `max_weight`.
pub fn hall_basis(
    generators: &[GeneratorSymbol],
    target: u32,
    max_weight: usize,
) -> Result<Vec<LieMonomial>> {
    if target == 0 {
        return domain("target degree must be at least 1");
    }
    let letters: Vec<Letter> = generators.iter().cloned().map(Letter::bare).collect();
    hall_monomials(&letters, target, max_weight, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, d: u32) -> GeneratorSymbol {
        GeneratorSymbol::plain(name, d).unwrap()
    }

    #[test]
    fn spec_examples() {
        let x = g("x", 1);
        let b = hall_basis(std::slice::from_ref(&x), 2, 2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].to_string(), "[x, x]");
        let y = g("y", 1);
        assert_eq!(hall_basis(&[x, y], 2, 2).unwrap().len(), 3);
        assert!(hall_basis(&[g("x", 2)], 4, 2).unwrap().is_empty());
    }

    #[test]
    fn single_letter_words_are_lyndon() {
        let b = hall_basis(&[g("a", 3), g("b", 1), g("c", 2)], 3, 3).unwrap();
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert!(names.contains(&"a".to_string()));
        assert!(names.contains(&"[b, c]".to_string()));
        assert_eq!(b.len(), 2);
    }
}
