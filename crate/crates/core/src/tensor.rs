//! Tensor products of finite logics, their coordinate embeddings, and the
//! universal morphism into a target logic.

use std::collections::BTreeMap;
use std::ops::Deref;

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::choice::{check_expansion, for_each_choice};
use crate::classical::ClassicalAlgebra;
use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::lattice::{validate_with_limit, LatticeSpec, OrthoLattice};
use crate::product::build_product_with_limit;
use crate::report::{Law, Mode, Report, VerifyOptions};
use crate::universal::{enumerate_universal, UniversalLogic};

/// `⊗_α E_α`: the universal logic over a heterogeneous product.
#[derive(Debug)]
pub struct TensorLogic(UniversalLogic);

impl Deref for TensorLogic {
    type Target = UniversalLogic;

    fn deref(&self) -> &UniversalLogic {
        &self.0
    }
}

pub fn build_tensor(factors: Vec<OrthoLattice>, max_poset: usize, max_carrier: usize) -> Result<TensorLogic> {
    let poset = build_product_with_limit(factors, max_poset)?;
    Ok(TensorLogic(enumerate_universal(poset, max_carrier)?))
}

/// Outcome of a meet-join distributivity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MjVerdict {
    pub holds: bool,
    pub mode: Mode,
    pub subfamilies: u64,
    /// Indices into the family of a failing subfamily.
    pub witness: Option<Vec<usize>>,
}

/// Checks `∧{∨S : S ∈ T} = ∨{∧ Im f : f choice function on T}` in `t` for
/// every subfamily `T` of `sets`, or for seeded random subfamilies when the
/// total number of choice functions exceeds `limit`.
pub fn check_mj_distributive(
    t: &OrthoLattice,
    sets: &[Vec<usize>],
    limit: u64,
    opts: &VerifyOptions,
) -> Result<MjVerdict> {
    let holds_on = |sub: &[usize]| {
        let lhs = t.meet_all(sub.iter().map(|&k| t.join_all(sets[k].iter().copied())));
        let sizes: Vec<usize> = sub.iter().map(|&k| sets[k].len()).collect();
        let mut rhs = t.bottom();
        for_each_choice(&sizes, |f| {
            let m = t.meet_all(f.iter().zip(sub).map(|(&i, &k)| sets[k][i]));
            rhs = t.join(rhs, m);
        });
        lhs == rhs
    };

    // Σ_T Π_{S∈T} |S| = Π_S (1 + |S|)
    let total = sets
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(1 + s.len() as u128));
    if sets.len() <= 20 && total <= limit as u128 {
        let mut subfamilies = 0;
        for mask in 0u64..1 << sets.len() {
            let sub: Vec<usize> = (0..sets.len()).filter(|k| mask >> k & 1 == 1).collect();
            subfamilies += 1;
            if !holds_on(&sub) {
                return Ok(MjVerdict {
                    holds: false,
                    mode: Mode::Exhaustive,
                    subfamilies,
                    witness: Some(sub),
                });
            }
        }
        return Ok(MjVerdict {
            holds: true,
            mode: Mode::Exhaustive,
            subfamilies,
            witness: None,
        });
    }

    let mut rng = opts.rng("meet-join distributivity");
    let mut subfamilies = 0;
    for _ in 0..opts.samples {
        let k = rng.gen_range(1..=3.min(sets.len()));
        let mut sub = sample(&mut rng, sets.len(), k).into_vec();
        sub.sort_unstable();
        let sizes: Vec<usize> = sub.iter().map(|&k| sets[k].len()).collect();
        check_expansion(&sizes, limit)?;
        subfamilies += 1;
        if !holds_on(&sub) {
            return Ok(MjVerdict {
                holds: false,
                mode: Mode::Sampled,
                subfamilies,
                witness: Some(sub),
            });
        }
    }
    Ok(MjVerdict {
        holds: true,
        mode: Mode::Sampled,
        subfamilies,
        witness: None,
    })
}

/// A target logic with one embedding table per factor.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetPair {
    pub target: OrthoLattice,
    /// `embeddings[α][a]` is `e_α(a)` as an element of `target`.
    pub embeddings: Vec<Vec<usize>>,
}

/// On-disk form of a [`TargetPair`]: the target as a lattice spec and one
/// label map per factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetPairFile {
    pub target: LatticeSpec,
    pub embeddings: Vec<BTreeMap<String, String>>,
}

impl TargetPairFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn resolve(&self, factors: &[OrthoLattice], max_elements: usize) -> Result<TargetPair> {
        let target = validate_with_limit(&self.target, max_elements)?;
        if self.embeddings.len() != factors.len() {
            return Err(Error::Arity {
                expected: factors.len(),
                found: self.embeddings.len(),
            });
        }
        let embeddings = self
            .embeddings
            .iter()
            .zip(factors)
            .map(|(map, f)| {
                f.elements()
                    .map(|a| {
                        let label = map.get(f.label(a)).ok_or_else(|| {
                            Error::TargetInvariantFailure(format!(
                                "no image given for {} of {}",
                                f.label(a),
                                f.name()
                            ))
                        })?;
                        target.index_of(label)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for (map, f) in self.embeddings.iter().zip(factors) {
            for k in map.keys() {
                f.index_of(k)?;
            }
        }
        Ok(TargetPair { target, embeddings })
    }
}

/// The table of `t` and its verification.
#[derive(Clone, Debug)]
pub struct Morphism {
    /// `t` of each carrier member, as an element of the target.
    pub table: Vec<usize>,
    pub report: Report,
}

impl TensorLogic {
    pub fn logic(&self) -> &UniversalLogic {
        &self.0
    }

    pub fn into_logic(self) -> UniversalLogic {
        self.0
    }

    /// Carrier index of `i_α(a)`.
    pub fn i_alpha(&self, alpha: usize, a: usize) -> Option<usize> {
        let p = self.poset();
        let t = p.embed_index(alpha, a).ok()?;
        self.index_of(&p.principal(t))
    }

    pub fn verify_i_alpha(&self) -> Report {
        let p = self.poset();
        let mut report = Report::new(format!("coordinate embeddings of {}", self.name()), 0);
        for (alpha, f) in p.factors().iter().enumerate() {
            let img: Vec<Option<usize>> = f.elements().map(|a| self.i_alpha(alpha, a)).collect();
            let tag = |law: &str| format!("i_{alpha} {law}");

            let mut members = Law::new(tag("lands in the carrier"), Mode::Exhaustive);
            for a in f.elements() {
                members.check(img[a].is_some(), || f.label(a).to_string());
            }
            let failed = members.failed();
            report.add(members);
            if failed {
                continue;
            }
            let img: Vec<usize> = img.into_iter().map(Option::unwrap).collect();

            let mut injective = Law::new(tag("is injective"), Mode::Exhaustive);
            for a in f.elements() {
                for b in f.elements() {
                    if a < b {
                        injective.check(img[a] != img[b], || format!("{} and {}", f.label(a), f.label(b)));
                    }
                }
            }
            report.add(injective);

            report.fact(
                tag("maps bounds to bounds"),
                Some(img[f.bottom()]) == self.bottom() && Some(img[f.top()]) == self.top(),
                String::new,
            );

            let mut ortho = Law::new(tag("maps ortho to star"), Mode::Exhaustive);
            for a in f.elements() {
                ortho.check(self.star(img[a]) == Some(img[f.ortho(a)]), || f.label(a).to_string());
            }
            report.add(ortho);

            // every subset of at most three elements, including the empty one
            let mut meets = Law::new(tag("preserves meets"), Mode::Exhaustive);
            let mut joins = Law::new(tag("maps joins to coproducts"), Mode::Exhaustive);
            for s in small_subsets(f.len(), 3) {
                let show = || {
                    let l: Vec<&str> = s.iter().map(|&a| f.label(a)).collect();
                    format!("{{{}}}", l.join(", "))
                };
                let members: Vec<usize> = s.iter().map(|&a| img[a]).collect();
                meets.check(
                    self.meet_of(&members) == Some(img[f.meet_all(s.iter().copied())]),
                    show,
                );
                joins.check(
                    self.coproduct_of(&members) == Some(img[f.join_all(s.iter().copied())]),
                    show,
                );
            }
            report.add(meets);
            report.add(joins);
        }
        report
    }

    /// For every tuple `A` and every `J ⊆ κ`, the join of the principal
    /// down-sets of `i_α(A(α))`, `α ∈ J`, is already closed.
    pub fn verify_prop_ju(&self) -> Report {
        let p = self.poset();
        let kappa = p.arity();
        let mut report = Report::new(format!("joins of coordinate embeddings in {}", self.name()), 0);
        let mut law = Law::new("join over J of i_a(A(a)) is closed", Mode::Exhaustive);
        for t in 0..p.len() {
            for mask in 0u64..1 << kappa {
                let letters = (0..kappa)
                    .filter(|a| mask >> a & 1 == 1)
                    .map(|a| p.embed_index(a, p.component(t, a)).expect("factor element"));
                let x = p.down_closure_of_letters(letters);
                law.check(p.closure(&x) == x, || format!("A = {}, J = {mask:#b}", p.label(t)));
            }
        }
        report.add(law);
        report
    }

    /// `S_A = {i_α(A(α)) : α ∈ κ}` for every tuple `A`, as carrier indices.
    pub fn canonical_family(&self) -> Vec<Vec<usize>> {
        let p = self.poset();
        (0..p.len())
            .map(|t| {
                let mut s: Vec<usize> = (0..p.arity())
                    .map(|a| self.i_alpha(a, p.component(t, a)).expect("embedding in carrier"))
                    .collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect()
    }

    pub fn name(&self) -> String {
        let names: Vec<&str> = self.poset().factors().iter().map(|f| f.name()).collect();
        names.join(" ⊗ ")
    }

    /// The pair `(i, ⊗E_α)` itself.
    pub fn identity_target(&self) -> Result<TargetPair> {
        let target = self.to_ortholattice(self.name())?;
        let p = self.poset();
        let embeddings = p
            .factors()
            .iter()
            .enumerate()
            .map(|(alpha, f)| {
                f.elements()
                    .map(|a| self.i_alpha(alpha, a).ok_or_else(|| Error::NotInCarrier(f.label(a).into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TargetPair { target, embeddings })
    }

    /// `e_α(a) = box(i_α(a))` in the classical algebra over the same factors.
    pub fn classical_target(&self, ca: &ClassicalAlgebra) -> Result<TargetPair> {
        let g = ca.ground();
        if g.poset() != self.poset() {
            return Err(Error::MismatchedInputs("classical algebra over different factors".into()));
        }
        let target = ca.to_ortholattice()?;
        let p = self.poset();
        let embeddings = p
            .factors()
            .iter()
            .enumerate()
            .map(|(alpha, f)| {
                f.elements()
                    .map(|a| {
                        let t = p.embed_index(alpha, a)?;
                        ca.index_of(g.box_of(t))
                            .ok_or_else(|| Error::NotInCarrier(g.format_points(g.box_of(t))))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TargetPair { target, embeddings })
    }

    /// Checks that every `e_α` is a logic embedding and that the family
    /// `{e_α(A(α)) : α}` over all tuples `A` is meet-join distributive.
    pub fn verify_target(&self, pair: &TargetPair, opts: &VerifyOptions) -> Result<()> {
        let p = self.poset();
        let t = &pair.target;
        let fail = |msg: String| Err(Error::TargetInvariantFailure(msg));
        if pair.embeddings.len() != p.arity() {
            return fail(format!("{} embeddings for {} factors", pair.embeddings.len(), p.arity()));
        }
        for (alpha, (e, f)) in pair.embeddings.iter().zip(p.factors()).enumerate() {
            if e.len() != f.len() || e.iter().any(|&x| x >= t.len()) {
                return fail(format!("embedding {alpha} does not map {} into the target", f.name()));
            }
            if e[f.bottom()] != t.bottom() || e[f.top()] != t.top() {
                return fail(format!("embedding {alpha} does not preserve bounds"));
            }
            for a in f.elements() {
                if e[f.ortho(a)] != t.ortho(e[a]) {
                    return fail(format!("embedding {alpha}: image of {}' is not the ortho of its image", f.label(a)));
                }
                for b in f.elements() {
                    if a != b && e[a] == e[b] {
                        return fail(format!("embedding {alpha} identifies {} and {}", f.label(a), f.label(b)));
                    }
                    if e[f.join(a, b)] != t.join(e[a], e[b]) || e[f.meet(a, b)] != t.meet(e[a], e[b]) {
                        return fail(format!(
                            "embedding {alpha} does not preserve join or meet of {} and {}",
                            f.label(a),
                            f.label(b)
                        ));
                    }
                }
            }
        }
        let family: Vec<Vec<usize>> = (0..p.len())
            .map(|a| {
                let mut s: Vec<usize> = (0..p.arity())
                    .map(|alpha| pair.embeddings[alpha][p.component(a, alpha)])
                    .collect();
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        let v = check_mj_distributive(t, &family, opts.max_expansion, opts)?;
        if !v.holds {
            let sub = v.witness.unwrap_or_default();
            let shown: Vec<String> = sub
                .iter()
                .map(|&k| {
                    let l: Vec<&str> = family[k].iter().map(|&x| t.label(x)).collect();
                    format!("{{{}}}", l.join(", "))
                })
                .collect();
            return fail(format!("image family is not meet-join distributive: {}", shown.join(" ")));
        }
        Ok(())
    }

    /// `t(∨_i A^i) = ∨_i ∧_α e_α(A^i(α))` on every carrier member, with
    /// its homomorphism laws.
    pub fn universal_morphism(&self, pair: &TargetPair, opts: &VerifyOptions) -> Result<Morphism> {
        self.verify_target(pair, opts)?;
        let p = self.poset();
        let t = &pair.target;
        let n = self.len();
        let letter = |m: usize| t.meet_all((0..p.arity()).map(|a| pair.embeddings[a][p.component(m, a)]));
        let table: Vec<usize> = (0..n)
            .map(|i| t.join_all(p.maximals(self.get(i)).0.into_iter().map(letter)))
            .collect();

        let mut report = Report::new(format!("universal morphism {} -> {}", self.name(), t.name()), opts.seed);

        let mut tia = Law::new("t after i_a is e_a", Mode::Exhaustive);
        for (alpha, f) in p.factors().iter().enumerate() {
            for a in f.elements() {
                let ok = self.i_alpha(alpha, a).is_some_and(|i| table[i] == pair.embeddings[alpha][a]);
                tia.check(ok, || format!("factor {alpha}, {}", f.label(a)));
            }
        }
        report.add(tia);

        report.fact(
            "bottom and top preserved",
            self.bottom().is_some_and(|b| table[b] == t.bottom())
                && self.top().is_some_and(|x| table[x] == t.top()),
            String::new,
        );

        let mut ortho = Law::new("preserves ortho", Mode::Exhaustive);
        for i in 0..n {
            ortho.check(self.star(i).is_some_and(|s| table[s] == t.ortho(table[i])), || self.label(i));
        }
        report.add(ortho);

        let exhaustive = n <= opts.exhaustive_limit;
        let mode = if exhaustive { Mode::Exhaustive } else { Mode::Sampled };
        let pairs: Vec<(usize, usize)> = if exhaustive {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            let mut rng = opts.rng("morphism pairs");
            (0..opts.samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        };
        let mut meets = Law::new("preserves meets", mode);
        let mut coproducts = Law::new("preserves coproducts", mode);
        let mut monotone = Law::new("monotone", mode);
        for &(i, j) in &pairs {
            let show = || format!("{} and {}", self.label(i), self.label(j));
            meets.check(self.meet(i, j).is_some_and(|m| table[m] == t.meet(table[i], table[j])), show);
            coproducts.check(self.join(i, j).is_some_and(|c| table[c] == t.join(table[i], table[j])), show);
            if self.leq(i, j) {
                monotone.check(t.leq(table[i], table[j]), show);
            }
        }
        report.add(meets);
        report.add(coproducts);
        report.add(monotone);

        let mut rng = opts.rng("morphism families");
        let mut families = Law::new("preserves coproducts of families", Mode::Sampled);
        for _ in 0..opts.samples {
            let k = rng.gen_range(0..=5.min(n));
            let s = sample(&mut rng, n, k).into_vec();
            let c = self.coproduct_of(&s);
            families.check(
                c.is_some_and(|c| table[c] == t.join_all(s.iter().map(|&i| table[i]))),
                || {
                    let l: Vec<String> = s.iter().map(|&i| self.label(i)).collect();
                    l.join(", ")
                },
            );
        }
        report.add(families);

        // each member is the coproduct over its letters A of ∧_α i_α(A(α))
        let mut generation = Law::new("member is generated by coordinate embeddings", Mode::Exhaustive);
        for i in 0..n {
            let parts: Vec<DownSet> = p
                .maximals(self.get(i))
                .0
                .into_iter()
                .map(|m| {
                    p.dmeet(
                        &(0..p.arity())
                            .map(|a| p.principal(p.embed_index(a, p.component(m, a)).expect("factor element")))
                            .collect::<Vec<_>>(),
                    )
                })
                .collect();
            generation.check(&self.coproduct_sets(&parts) == self.get(i), || self.label(i));
        }
        report.add(generation);

        Ok(Morphism { table, report })
    }
}

/// All subsets of `0..n` with at most `k` elements.
fn small_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l| l + 1);
            for x in start..n {
                let mut t: Vec<usize> = s.clone();
                t.push(x);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{build_classical, SetLattice};
    use crate::lattice::{boolean, chain2, find_iso, mo};
    use crate::product::{build_product, DEFAULT_MAX_POSET};
    use crate::universal::DEFAULT_MAX_CARRIER;

    fn tensor(factors: Vec<OrthoLattice>) -> TensorLogic {
        build_tensor(factors, DEFAULT_MAX_POSET, DEFAULT_MAX_CARRIER).unwrap()
    }

    fn opts() -> VerifyOptions {
        VerifyOptions::with_seed(11)
    }

    #[test]
    fn equal_factors_match_universal() {
        for e in [boolean(2).unwrap(), mo(2).unwrap()] {
            let tl = tensor(vec![e.clone(), e.clone()]);
            let u = enumerate_universal(build_product(vec![e.clone(); 2]).unwrap(), DEFAULT_MAX_CARRIER).unwrap();
            assert_eq!(tl.carrier(), u.carrier());
        }
    }

    #[test]
    fn chain_factor_is_neutral() {
        for e in [boolean(2).unwrap(), mo(2).unwrap()] {
            let tl = tensor(vec![chain2(), e.clone()]);
            let l = tl.to_ortholattice("B1 ⊗ E").unwrap();
            assert!(find_iso(&e, &l).is_some());
        }
    }

    #[test]
    fn mixed_product_axioms() {
        let tl = tensor(vec![boolean(2).unwrap(), mo(2).unwrap()]);
        assert!(tl.verify_logic_axioms(&opts()).passed());
    }

    #[test]
    fn embeddings_and_prop_ju() {
        for factors in [vec![boolean(2).unwrap(); 2], vec![boolean(2).unwrap(), mo(2).unwrap()]] {
            let tl = tensor(factors);
            let r = tl.verify_i_alpha();
            assert!(r.passed(), "{r}");
            let r = tl.verify_prop_ju();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn embedding_examples() {
        let tl = tensor(vec![boolean(2).unwrap(); 2]);
        let b2 = boolean(2).unwrap();
        let (a, a_) = (b2.index_of("a").unwrap(), b2.index_of("a'").unwrap());
        let (ia, ia_) = (tl.i_alpha(0, a).unwrap(), tl.i_alpha(0, a_).unwrap());
        assert_eq!(tl.join(ia, ia_), tl.top());
        assert_eq!(tl.meet(ia, ia_), tl.bottom());
        assert_eq!(tl.i_alpha(0, b2.top()), tl.top());
        assert_eq!(tl.i_alpha(1, b2.bottom()), tl.bottom());
    }

    #[test]
    fn prop_ju_example() {
        let tl = tensor(vec![boolean(2).unwrap(); 2]);
        let p = tl.poset();
        let x = p.down_closure_of_letters(["(a,1)", "(1,a')"].iter().map(|l| p.parse_label(l).unwrap()));
        assert_eq!(p.closure(&x), x);
    }

    #[test]
    fn mj_distributivity() {
        let tl = tensor(vec![boolean(2).unwrap(); 2]);
        let t = tl.to_ortholattice("T").unwrap();
        let v = check_mj_distributive(&t, &tl.canonical_family(), 1_000_000, &opts()).unwrap();
        assert!(v.holds);
        assert_eq!(v.mode, Mode::Exhaustive);

        let m = mo(2).unwrap();
        let l = |s: &str| m.index_of(s).unwrap();
        let fam = vec![vec![l("p"), l("q")], vec![l("p'"), l("q'")]];
        let v = check_mj_distributive(&m, &fam, 1_000_000, &opts()).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(vec![0, 1]));

        let b3 = boolean(3).unwrap();
        let fam = vec![vec![1, 2], vec![3, 4], vec![5, 6]];
        assert!(check_mj_distributive(&b3, &fam, 1_000_000, &opts()).unwrap().holds);
    }

    #[test]
    fn identity_target_gives_identity() {
        let tl = tensor(vec![boolean(2).unwrap(), mo(2).unwrap()]);
        let pair = tl.identity_target().unwrap();
        let m = tl.universal_morphism(&pair, &opts()).unwrap();
        assert!(m.report.passed(), "{}", m.report);
        assert_eq!(m.table, (0..tl.len()).collect::<Vec<_>>());
    }

    #[test]
    fn classical_target_reproduces_epimorphism() {
        let e = SetLattice::powerset(2).unwrap();
        let ca = build_classical(&e, 2).unwrap();
        let tl = tensor(vec![e.lattice().clone(); 2]);
        let pair = tl.classical_target(&ca).unwrap();
        let m = tl.universal_morphism(&pair, &opts()).unwrap();
        assert!(m.report.passed(), "{}", m.report);
        let epi = ca.epimorphism_e(&tl, &opts()).unwrap();
        let via_e: Vec<usize> = epi.table.iter().map(|s| ca.index_of(s).unwrap()).collect();
        assert_eq!(m.table, via_e);
    }

    #[test]
    fn bad_target_rejected() {
        let tl = tensor(vec![boolean(2).unwrap()]);
        let mut pair = tl.identity_target().unwrap();
        pair.embeddings[0].swap(1, 2);
        pair.embeddings[0][1] = pair.embeddings[0][0];
        assert!(matches!(
            tl.universal_morphism(&pair, &opts()),
            Err(Error::TargetInvariantFailure(_))
        ));
    }

    #[test]
    fn non_distributive_image_family_rejected() {
        // B2 ⊗ B2 into MO2 with both factors landing on different blocks
        let tl = tensor(vec![boolean(2).unwrap(); 2]);
        let m = mo(2).unwrap();
        let l = |s: &str| m.index_of(s).unwrap();
        let e0 = vec![l("0"), l("p"), l("p'"), l("1")];
        let e1 = vec![l("0"), l("q"), l("q'"), l("1")];
        let pair = TargetPair {
            target: m,
            embeddings: vec![e0, e1],
        };
        let err = tl.verify_target(&pair, &opts()).unwrap_err();
        assert!(matches!(err, Error::TargetInvariantFailure(ref s) if s.contains("meet-join")), "{err}");
    }

    #[test]
    fn target_file_round_trip() {
        let tl = tensor(vec![boolean(2).unwrap()]);
        let pair = tl.identity_target().unwrap();
        let b2 = boolean(2).unwrap();
        let file = TargetPairFile {
            target: pair.target.to_spec(),
            embeddings: vec![b2
                .elements()
                .map(|a| (b2.label(a).to_string(), pair.target.label(pair.embeddings[0][a]).to_string()))
                .collect()],
        };
        let json = serde_json::to_string(&file).unwrap();
        let back = TargetPairFile::from_json(&json).unwrap().resolve(&[b2], 64).unwrap();
        assert_eq!(back, pair);
    }

    #[test]
    fn subsets_counted() {
        assert_eq!(small_subsets(4, 3).len(), 1 + 4 + 6 + 4);
        assert_eq!(small_subsets(2, 3).len(), 4);
    }
}
