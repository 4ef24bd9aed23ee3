//! Nonempty down-sets of a product poset.
//!
//! A class of free terms `⊔ A^i` is identified with the down-closure of its
//! letters, so equivalent terms become equal bit vectors. Join is union,
//! meet is intersection, the order is inclusion.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::choice::{check_expansion, for_each_choice};
use crate::error::{Error, Result};
use crate::product::ProductPoset;

pub const DEFAULT_MAX_EXPANSION: u64 = 1_000_000;

/// A downward-closed subset of a product carrier that contains `0̂`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DownSet(pub(crate) BitSet);

impl DownSet {
    pub fn bits(&self) -> &BitSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    /// Always false: a down-set contains `0̂`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }
}

impl fmt::Debug for DownSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DownSet{:?}", self.0)
    }
}

/// Pairwise incomparable carrier indices, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Antichain(pub Vec<usize>);

impl Antichain {
    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Outcome of the complete-distributivity brute force on one family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityVerdict {
    /// `∧_j ∨_i x_j^i = ∨_f ∧_j x_j^{f(j)}`
    pub meet_of_joins: bool,
    /// `∨_j ∧_i x_j^i = ∧_f ∨_j x_j^{f(j)}`
    pub join_of_meets: bool,
    /// `∨_f ∧_j x_j^{f(j)} ≤ ∧_j ∨_i x_j^i`
    pub min_max: bool,
    pub choice_functions: u128,
}

impl DistributivityVerdict {
    pub fn holds(&self) -> bool {
        self.meet_of_joins && self.join_of_meets && self.min_max
    }
}

impl ProductPoset {
    pub fn principal(&self, t: usize) -> DownSet {
        DownSet(self.down(t).clone())
    }

    /// `{0̂}`
    pub fn bottom_set(&self) -> DownSet {
        self.principal(self.bottom())
    }

    pub fn full_set(&self) -> DownSet {
        DownSet(BitSet::full(self.len()))
    }

    /// Wraps a bit vector after checking it is a nonempty down-set
    /// containing `0̂`.
    pub fn down_set_from_bits(&self, bits: BitSet) -> Result<DownSet> {
        if bits.universe() != self.len() {
            return Err(Error::NotADownSet(format!(
                "bit vector over {} elements, carrier has {}",
                bits.universe(),
                self.len()
            )));
        }
        if !bits.contains(self.bottom()) {
            return Err(Error::NotADownSet("missing bottom".into()));
        }
        for x in bits.iter() {
            if let Some(y) = self.down(x).iter().find(|&y| !bits.contains(y)) {
                return Err(Error::NotADownSet(format!(
                    "{} is below {} but missing",
                    self.label(y),
                    self.label(x)
                )));
            }
        }
        Ok(DownSet(bits))
    }

    /// Union; the empty join is `{0̂}`.
    pub fn djoin<'a, I: IntoIterator<Item = &'a DownSet>>(&self, xs: I) -> DownSet {
        let mut acc = self.bottom_set();
        for x in xs {
            acc.0.union_with(&x.0);
        }
        acc
    }

    /// Intersection; the empty meet is the full carrier.
    pub fn dmeet<'a, I: IntoIterator<Item = &'a DownSet>>(&self, xs: I) -> DownSet {
        let mut acc = self.full_set();
        for x in xs {
            acc.0.intersect_with(&x.0);
        }
        acc
    }

    pub fn dleq(&self, x: &DownSet, y: &DownSet) -> bool {
        x.0.is_subset(&y.0)
    }

    pub fn maximals(&self, x: &DownSet) -> Antichain {
        Antichain(
            x.0.iter()
                .filter(|&m| self.up(m).iter().all(|u| u == m || !x.0.contains(u)))
                .collect(),
        )
    }

    pub fn down_closure(&self, a: &Antichain) -> Result<DownSet> {
        for (k, &x) in a.0.iter().enumerate() {
            for &y in &a.0[k + 1..] {
                if self.leq(x, y) || self.leq(y, x) {
                    return Err(Error::InvalidAntichain(self.label(x), self.label(y)));
                }
            }
        }
        Ok(self.down_closure_of_letters(a.0.iter().copied()))
    }

    /// Class of the term whose letters are `letters`; repetitions and
    /// comparable letters are allowed.
    pub fn down_closure_of_letters<I: IntoIterator<Item = usize>>(&self, letters: I) -> DownSet {
        let mut acc = self.bottom_set();
        for t in letters {
            acc.0.union_with(self.down(t));
        }
        acc
    }

    /// `↓t* = ∨_α ↓i_α(t(α)^⊥)`
    pub fn star_singleton(&self, t: usize) -> DownSet {
        self.star_singletons()[t].clone()
    }

    pub(crate) fn star_singletons(&self) -> &[DownSet] {
        self.star_singletons.get_or_init(|| {
            (0..self.len())
                .map(|t| {
                    self.down_closure_of_letters((0..self.arity()).map(|alpha| {
                        let f = &self.factors()[alpha];
                        let c = f.ortho(self.component(t, alpha));
                        self.embed_index(alpha, c).expect("factor element in range")
                    }))
                })
                .collect()
        })
    }

    /// Intersection of the singleton stars of the maximal letters.
    pub fn star(&self, x: &DownSet) -> DownSet {
        let stars = self.star_singletons();
        let mut acc = self.full_set();
        for m in self.maximals(x).0 {
            acc.0.intersect_with(&stars[m].0);
        }
        acc
    }

    /// Star by direct expansion over all `f: I → κ`, where `I` indexes the
    /// maximal letters of `x`.
    pub fn star_choicefn(&self, x: &DownSet, limit: u64) -> Result<DownSet> {
        let letters = self.maximals(x).0;
        let kappa = self.arity();
        check_expansion(&vec![kappa; letters.len()], limit)?;
        let comps: Vec<Vec<usize>> = letters.iter().map(|&t| self.components(t)).collect();
        let mut out = self.bottom_set();
        for_each_choice(&vec![kappa; letters.len()], |f| {
            let tuple: Vec<usize> = (0..kappa)
                .map(|n| {
                    let fac = &self.factors()[n];
                    fac.meet_all(
                        f.iter()
                            .zip(&comps)
                            .filter(|(&fi, _)| fi == n)
                            .map(|(_, c)| fac.ortho(c[n])),
                    )
                })
                .collect();
            let t = self.tuple_index(&tuple).expect("components in range");
            out.0.union_with(self.down(t));
        });
        Ok(out)
    }

    pub fn closure(&self, x: &DownSet) -> DownSet {
        self.star(&self.star(x))
    }

    /// Meet by expanding `∧_j ∨_i A_j^i = ∨_f ∧_j A_j^{f(j)}` over the
    /// maximal letters, using only componentwise tuple meets.
    pub fn dmeet_choicefn(&self, xs: &[DownSet], limit: u64) -> Result<DownSet> {
        let letters: Vec<Vec<usize>> = xs.iter().map(|x| self.maximals(x).0).collect();
        let sizes: Vec<usize> = letters.iter().map(Vec::len).collect();
        check_expansion(&sizes, limit)?;
        let mut out = self.bottom_set();
        for_each_choice(&sizes, |f| {
            let t = f
                .iter()
                .zip(&letters)
                .fold(self.top(), |acc, (&i, l)| self.meet_index(acc, l[i]));
            out.0.union_with(self.down(t));
        });
        Ok(out)
    }

    /// Brute-force check of both complete distributive laws and the
    /// Min-Max inequality on `family[j][i]`.
    pub fn check_completely_distributive(
        &self,
        family: &[Vec<DownSet>],
        limit: u64,
    ) -> Result<DistributivityVerdict> {
        let sizes: Vec<usize> = family.iter().map(Vec::len).collect();
        let choice_functions = check_expansion(&sizes, limit)?;

        let meet_of_joins_lhs = self.dmeet(&family.iter().map(|xs| self.djoin(xs)).collect::<Vec<_>>());
        let join_of_meets_lhs = self.djoin(&family.iter().map(|xs| self.dmeet(xs)).collect::<Vec<_>>());

        let mut join_over_f = self.bottom_set();
        let mut meet_over_f = self.full_set();
        for_each_choice(&sizes, |f| {
            let picked: Vec<&DownSet> = f.iter().zip(family).map(|(&i, xs)| &xs[i]).collect();
            join_over_f.0.union_with(&self.dmeet(picked.iter().copied()).0);
            meet_over_f.0.intersect_with(&self.djoin(picked.iter().copied()).0);
        });

        Ok(DistributivityVerdict {
            meet_of_joins: meet_of_joins_lhs == join_over_f,
            join_of_meets: join_of_meets_lhs == meet_over_f,
            min_max: self.dleq(&join_over_f, &meet_of_joins_lhs),
            choice_functions,
        })
    }

    /// All down-sets, sorted; fails once more than `cap` have been found.
    pub fn enumerate_down_sets(&self, cap: usize) -> Result<Vec<DownSet>> {
        fn go(
            p: &ProductPoset,
            next: usize,
            inside: &mut BitSet,
            outside: &mut BitSet,
            out: &mut Vec<DownSet>,
            cap: usize,
        ) -> Result<()> {
            let Some(x) = (next..p.len()).find(|&x| !inside.contains(x) && !outside.contains(x)) else {
                if out.len() >= cap {
                    return Err(Error::ExpansionTooLarge {
                        size: out.len() as u128 + 1,
                        limit: cap as u64,
                    });
                }
                out.push(DownSet(inside.clone()));
                return Ok(());
            };
            let (saved_in, saved_out) = (inside.clone(), outside.clone());
            inside.union_with(p.down(x));
            go(p, x + 1, inside, outside, out, cap)?;
            *inside = saved_in;
            outside.union_with(p.up(x));
            go(p, x + 1, inside, outside, out, cap)?;
            *outside = saved_out;
            Ok(())
        }
        let mut inside = self.bottom_set().0;
        let mut outside = BitSet::new(self.len());
        let mut out = Vec::new();
        go(self, 0, &mut inside, &mut outside, &mut out, cap)?;
        out.sort();
        Ok(out)
    }

    /// Down-closure of `generators` uniformly drawn carrier elements.
    pub fn random_down_set<R: Rng + ?Sized>(&self, rng: &mut R, generators: usize) -> DownSet {
        self.down_closure_of_letters((0..generators).map(|_| rng.gen_range(0..self.len())))
    }

    /// Random down-set with between zero and four generators.
    pub fn sample_down_set<R: Rng + ?Sized>(&self, rng: &mut R) -> DownSet {
        let k = rng.gen_range(0..=4);
        self.random_down_set(rng, k)
    }

    /// Labels of the maximal antichain, in carrier order.
    pub fn antichain_labels(&self, x: &DownSet) -> Vec<String> {
        self.maximals(x).0.into_iter().map(|t| self.label(t)).collect()
    }

    /// `{(a,1), (1,a)}`
    pub fn format_down_set(&self, x: &DownSet) -> String {
        format!("{{{}}}", self.antichain_labels(x).join(", "))
    }
}
