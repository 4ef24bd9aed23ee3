//! Set-based models: a lattice realized as subsets of a finite set `S`, the
//! boxes `a_1 × … × a_κ` in `S^κ`, the algebra they generate under union,
//! and the map from the universal logic onto it.

use std::collections::{BTreeSet, HashMap};

use rand::seq::index::sample;
use rand::Rng;

use crate::bitset::BitSet;
use crate::choice::{check_expansion, for_each_choice};
use crate::error::{Error, Result};
use crate::lattice::{boolean, OrthoLattice};
use crate::product::{build_product, ProductPoset};
use crate::report::{Law, Mode, Report, VerifyOptions};
use crate::universal::UniversalLogic;

pub const DEFAULT_MAX_POINTS: usize = 24;

/// An ortholattice whose elements are subsets of `{0, …, ground-1}`, with
/// inclusion as order and set complement as orthocomplement.
#[derive(Clone, Debug, PartialEq)]
pub struct SetLattice {
    lattice: OrthoLattice,
    ground: usize,
    subsets: Vec<u64>,
}

impl SetLattice {
    /// The full power set `2^S` with `|S| = n`; element `i` is the subset
    /// with bit mask `i`.
    pub fn powerset(n: usize) -> Result<Self> {
        let lattice = boolean(n)?;
        let subsets = (0..1u64 << n).collect();
        Self::new(lattice, n, subsets)
    }

    pub fn new(lattice: OrthoLattice, ground: usize, subsets: Vec<u64>) -> Result<Self> {
        if ground > 63 {
            return Err(Error::GroundTooLarge {
                points: ground as u128,
                limit: 63,
            });
        }
        let all = (1u64 << ground) - 1;
        let bad = |msg: String| Err(Error::MismatchedInputs(msg));
        if subsets.len() != lattice.len() {
            return bad(format!("{} subsets for {} elements", subsets.len(), lattice.len()));
        }
        for x in lattice.elements() {
            if subsets[x] & !all != 0 {
                return bad(format!("{} is not a subset of S", lattice.label(x)));
            }
            if subsets[lattice.ortho(x)] != all ^ subsets[x] {
                return bad(format!("ortho of {} is not the set complement", lattice.label(x)));
            }
            for y in lattice.elements() {
                let incl = subsets[x] & !subsets[y] == 0;
                if lattice.leq(x, y) != incl {
                    return bad(format!(
                        "order of {} and {} is not inclusion",
                        lattice.label(x),
                        lattice.label(y)
                    ));
                }
            }
        }
        Ok(SetLattice {
            lattice,
            ground,
            subsets,
        })
    }

    pub fn lattice(&self) -> &OrthoLattice {
        &self.lattice
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn subset(&self, x: usize) -> u64 {
        self.subsets[x]
    }
}

/// The points of `S^κ` and the box of every product tuple.
#[derive(Clone, Debug)]
pub struct GroundModel {
    e: SetLattice,
    kappa: usize,
    poset: ProductPoset,
    points: Vec<Vec<usize>>,
    boxes: Vec<BitSet>,
}

impl GroundModel {
    pub fn new(e: &SetLattice, kappa: usize, max_points: usize) -> Result<Self> {
        let projected = (e.ground as u128).checked_pow(kappa as u32).unwrap_or(u128::MAX);
        if projected > max_points as u128 {
            return Err(Error::GroundTooLarge {
                points: projected,
                limit: max_points,
            });
        }
        let poset = build_product(vec![e.lattice.clone(); kappa])?;
        let mut points = Vec::new();
        for_each_choice(&vec![e.ground; kappa], |p| points.push(p.to_vec()));
        let masks: Vec<Vec<u64>> = (0..poset.len())
            .map(|t| poset.components(t).iter().map(|&c| e.subsets[c]).collect())
            .collect();
        let boxes = masks.iter().map(|m| cartesian(&points, m)).collect();
        Ok(GroundModel {
            e: e.clone(),
            kappa,
            poset,
            points,
            boxes,
        })
    }

    pub fn poset(&self) -> &ProductPoset {
        &self.poset
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn points(&self) -> &[Vec<usize>] {
        &self.points
    }

    pub fn box_of(&self, t: usize) -> &BitSet {
        &self.boxes[t]
    }

    pub fn all_points(&self) -> BitSet {
        BitSet::full(self.points.len())
    }

    pub fn point_label(&self, i: usize) -> String {
        let parts: Vec<String> = self.points[i].iter().map(|c| c.to_string()).collect();
        parts.join(".")
    }

    /// `{0.1, 1.1}`
    pub fn format_points(&self, s: &BitSet) -> String {
        let parts: Vec<String> = s.iter().map(|i| self.point_label(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Points whose every coordinate lies in the matching mask.
fn cartesian(points: &[Vec<usize>], masks: &[u64]) -> BitSet {
    BitSet::from_indices(
        points.len(),
        points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.iter().zip(masks).all(|(&c, &m)| m >> c & 1 == 1))
            .map(|(i, _)| i),
    )
}

/// The union-closure of all boxes.
#[derive(Clone, Debug)]
pub struct ClassicalAlgebra {
    ground: GroundModel,
    members: Vec<BitSet>,
    index: HashMap<BitSet, usize>,
}

pub fn build_classical(e: &SetLattice, kappa: usize) -> Result<ClassicalAlgebra> {
    build_classical_with_limit(e, kappa, DEFAULT_MAX_POINTS)
}

pub fn build_classical_with_limit(e: &SetLattice, kappa: usize, max_points: usize) -> Result<ClassicalAlgebra> {
    let ground = GroundModel::new(e, kappa, max_points)?;
    let boxes: BTreeSet<BitSet> = ground.boxes.iter().cloned().collect();
    let mut seen = boxes.clone();
    let mut queue: Vec<BitSet> = boxes.iter().cloned().collect();
    while let Some(x) = queue.pop() {
        for b in &boxes {
            let y = x.union(b);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    let members: Vec<BitSet> = seen.into_iter().collect();
    let index = members.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(ClassicalAlgebra {
        ground,
        members,
        index,
    })
}

/// The table of `𝔢` and its verification.
#[derive(Clone, Debug)]
pub struct Epimorphism {
    /// Image of each carrier member, by carrier index.
    pub table: Vec<BitSet>,
    pub report: Report,
    /// Whether distinct members have distinct images. Reported only.
    pub injective: bool,
}

impl ClassicalAlgebra {
    pub fn ground(&self) -> &GroundModel {
        &self.ground
    }

    pub fn members(&self) -> &[BitSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &BitSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Closure of the members under the set operations, and the box laws.
    pub fn verify(&self) -> Report {
        let g = &self.ground;
        let p = g.poset();
        let mut report = Report::new(format!("classical algebra over {}^{}", g.e.lattice.name(), g.kappa), 0);
        let empty = BitSet::new(g.points.len());
        report.fact(
            "contains empty set and all points",
            self.index_of(&empty).is_some() && self.index_of(&g.all_points()).is_some(),
            String::new,
        );
        let mut compl = Law::new("closed under complement", Mode::Exhaustive);
        for m in &self.members {
            compl.check(self.index_of(&m.complement()).is_some(), || g.format_points(m));
        }
        report.add(compl);
        let mut union = Law::new("closed under union", Mode::Exhaustive);
        let mut inter = Law::new("closed under intersection", Mode::Exhaustive);
        for a in &self.members {
            for b in &self.members {
                union.check(self.index_of(&a.union(b)).is_some(), || {
                    format!("{} and {}", g.format_points(a), g.format_points(b))
                });
                inter.check(self.index_of(&a.intersection(b)).is_some(), || {
                    format!("{} and {}", g.format_points(a), g.format_points(b))
                });
            }
        }
        report.add(union);
        report.add(inter);

        let mut meet = Law::new("box of tuple meet is intersection of boxes", Mode::Exhaustive);
        let mut nested = Law::new("union of nested boxes is the larger box", Mode::Exhaustive);
        for x in 0..p.len() {
            for y in 0..p.len() {
                meet.check(
                    g.box_of(p.meet_index(x, y)) == &g.box_of(x).intersection(g.box_of(y)),
                    || format!("{} and {}", p.label(x), p.label(y)),
                );
                if p.leq(x, y) {
                    nested.check(&g.box_of(x).union(g.box_of(y)) == g.box_of(y), || {
                        format!("{} <= {}", p.label(x), p.label(y))
                    });
                }
            }
        }
        report.add(meet);
        report.add(nested);
        report
    }

    /// Compares the complement of `∪_i box(A^i)` with the expansion over all
    /// `f: I → κ` of boxes whose coordinate `n` is the intersection of the
    /// complements `(a_n^i)^c` with `f(i) = n`.
    pub fn verify_complement(&self, letters: &[usize], limit: u64) -> Result<bool> {
        let g = &self.ground;
        let kappa = g.kappa;
        check_expansion(&vec![kappa; letters.len()], limit)?;
        let all = (1u64 << g.e.ground) - 1;
        let comps: Vec<Vec<u64>> = letters
            .iter()
            .map(|&t| g.poset.components(t).iter().map(|&c| g.e.subsets[c]).collect())
            .collect();

        let mut union = BitSet::new(g.points.len());
        for &t in letters {
            union.union_with(g.box_of(t));
        }
        let mut expansion = BitSet::new(g.points.len());
        for_each_choice(&vec![kappa; letters.len()], |f| {
            let masks: Vec<u64> = (0..kappa)
                .map(|n| {
                    f.iter()
                        .zip(&comps)
                        .filter(|(&fi, _)| fi == n)
                        .fold(all, |acc, (_, c)| acc & (all ^ c[n]))
                })
                .collect();
            expansion.union_with(&cartesian(&g.points, &masks));
        });
        Ok(expansion == union.complement())
    }

    /// The members as an ortholattice under inclusion and complement.
    pub fn to_ortholattice(&self) -> Result<OrthoLattice> {
        let g = &self.ground;
        let n = self.len();
        let labels: Vec<String> = self.members.iter().map(|m| g.format_points(m)).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.members[i].is_subset(&self.members[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let ortho = self
            .members
            .iter()
            .map(|m| {
                self.index_of(&m.complement())
                    .ok_or_else(|| Error::NotInCarrier(g.format_points(m)))
            })
            .collect::<Result<Vec<_>>>()?;
        OrthoLattice::from_relation(format!("<{}^{}>", g.e.lattice.name(), g.kappa), labels, &pairs, ortho)
    }

    /// `𝔢(x) = ∪ box(A)` over the maximal letters `A` of `x`.
    pub fn image(&self, u: &UniversalLogic, i: usize) -> BitSet {
        let p = u.poset();
        let mut out = BitSet::new(self.ground.points.len());
        for t in p.maximals(u.get(i)).0 {
            out.union_with(self.ground.box_of(t));
        }
        out
    }

    pub fn epimorphism_e(&self, u: &UniversalLogic, opts: &VerifyOptions) -> Result<Epimorphism> {
        let g = &self.ground;
        if u.poset() != g.poset() {
            return Err(Error::MismatchedInputs(format!(
                "universal logic has {} factors {:?}, algebra is over {}^{}",
                u.poset().arity(),
                u.poset().factors().iter().map(|f| f.name()).collect::<Vec<_>>(),
                g.e.lattice.name(),
                g.kappa
            )));
        }
        let p = u.poset();
        let n = u.len();
        let table: Vec<BitSet> = (0..n).map(|i| self.image(u, i)).collect();
        let mut report = Report::new(
            format!("epimorphism onto <{}^{}>", g.e.lattice.name(), g.kappa),
            opts.seed,
        );

        let mut inside = Law::new("image lies in the algebra", Mode::Exhaustive);
        for (i, s) in table.iter().enumerate() {
            inside.check(self.index_of(s).is_some(), || u.label(i));
        }
        report.add(inside);

        let hit: BTreeSet<&BitSet> = table.iter().collect();
        let missed = self.members.iter().find(|m| !hit.contains(m));
        report.fact("surjective", missed.is_none(), || g.format_points(missed.unwrap()));

        let empty = BitSet::new(g.points.len());
        report.fact(
            "bottom to empty set, top to all points",
            u.bottom().is_some_and(|b| table[b] == empty)
                && u.top().is_some_and(|t| table[t] == g.all_points()),
            String::new,
        );

        let mut letters = Law::new("tuple class maps to its box", Mode::Exhaustive);
        for t in 0..p.len() {
            let i = u.index_of(&p.principal(t));
            letters.check(i.is_some_and(|i| &table[i] == g.box_of(t)), || p.label(t));
        }
        report.add(letters);

        let mut ortho = Law::new("star maps to complement", Mode::Exhaustive);
        for i in 0..n {
            ortho.check(u.star(i).is_some_and(|s| table[s] == table[i].complement()), || u.label(i));
        }
        report.add(ortho);

        let mut rng = opts.rng("coproducts");
        let mut coproducts = Law::new("coproduct maps to union", Mode::Sampled);
        for _ in 0..opts.samples {
            let k = rng.gen_range(0..=5.min(n));
            let s = sample(&mut rng, n, k).into_vec();
            let c = u.coproduct_of(&s);
            let mut union = empty.clone();
            for &i in &s {
                union.union_with(&table[i]);
            }
            coproducts.check(c.is_some_and(|c| table[c] == union), || {
                let labels: Vec<String> = s.iter().map(|&i| u.label(i)).collect();
                labels.join(", ")
            });
        }
        report.add(coproducts);

        let mut meets = Law::new("meet maps to intersection", Mode::Exhaustive);
        let mut monotone = Law::new("monotone", Mode::Exhaustive);
        for i in 0..n {
            for j in 0..n {
                meets.check(
                    u.meet(i, j).is_some_and(|m| table[m] == table[i].intersection(&table[j])),
                    || format!("{} and {}", u.label(i), u.label(j)),
                );
                if u.leq(i, j) {
                    monotone.check(table[i].is_subset(&table[j]), || {
                        format!("{} <= {}", u.label(i), u.label(j))
                    });
                }
            }
        }
        report.add(meets);
        report.add(monotone);

        let injective = hit.len() == n;
        Ok(Epimorphism {
            table,
            report,
            injective,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universal::enumerate_universal;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn member_counts() {
        assert_eq!(build_classical(&SetLattice::powerset(2).unwrap(), 2).unwrap().len(), 16);
        assert_eq!(build_classical(&SetLattice::powerset(1).unwrap(), 1).unwrap().len(), 2);
        assert_eq!(build_classical(&SetLattice::powerset(2).unwrap(), 1).unwrap().len(), 4);
    }

    #[test]
    fn ground_limit() {
        let err = build_classical(&SetLattice::powerset(3).unwrap(), 3).unwrap_err();
        assert_eq!(err, Error::GroundTooLarge { points: 27, limit: 24 });
    }

    #[test]
    fn closure_report_passes() {
        for (n, k) in [(1, 1), (2, 1), (2, 2), (1, 3), (3, 1)] {
            let ca = build_classical(&SetLattice::powerset(n).unwrap(), k).unwrap();
            let r = ca.verify();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn sub_powerset_realization() {
        // {∅, {0}, {1,2}, S} inside 2^{0,1,2}
        let l = boolean(2).unwrap();
        let e = SetLattice::new(l, 3, vec![0b000, 0b001, 0b110, 0b111]).unwrap();
        let ca = build_classical(&e, 2).unwrap();
        assert!(ca.verify().passed());
        // the generated algebra is proper: atoms are the 4 products of blocks
        assert_eq!(ca.len(), 16);
        assert!(ca.len() < 1 << 9);
    }

    #[test]
    fn bad_realization_rejected() {
        let l = boolean(2).unwrap();
        assert!(SetLattice::new(l, 2, vec![0b00, 0b01, 0b01, 0b11]).is_err());
    }

    #[test]
    fn complement_expansion() {
        let ca = build_classical(&SetLattice::powerset(2).unwrap(), 2).unwrap();
        let p = ca.ground().poset();
        let a_s = p.parse_label("(a,1)").unwrap();
        assert!(ca.verify_complement(&[a_s], 100).unwrap());
        assert!(ca.verify_complement(&[0], 100).unwrap());
        assert!(ca.verify_complement(&[], 100).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let letters: Vec<usize> = (0..3).map(|_| rng.gen_range(0..p.len())).collect();
            assert!(ca.verify_complement(&letters, 100).unwrap());
        }
        assert!(ca.verify_complement(&[1, 2, 3], 7).is_err());
    }

    #[test]
    fn epimorphism_onto_power_set() {
        let e = SetLattice::powerset(2).unwrap();
        let ca = build_classical(&e, 2).unwrap();
        let u = enumerate_universal(ca.ground().poset().clone(), 10_000).unwrap();
        let epi = ca.epimorphism_e(&u, &VerifyOptions::with_seed(1)).unwrap();
        assert!(epi.report.passed(), "{}", epi.report);
        let p = u.poset();
        let a1 = p.principal(p.parse_label("(a,1)").unwrap());
        let a_1 = p.principal(p.parse_label("(a',1)").unwrap());
        let c = u.coproduct(&[a1, a_1]).unwrap();
        assert_eq!(epi.table[u.index_of(&c).unwrap()], ca.ground().all_points());
    }

    #[test]
    fn mismatched_inputs() {
        let ca = build_classical(&SetLattice::powerset(2).unwrap(), 2).unwrap();
        let u = crate::universal::universal_of(&boolean(2).unwrap(), 1).unwrap();
        assert!(matches!(
            ca.epimorphism_e(&u, &VerifyOptions::default()),
            Err(Error::MismatchedInputs(_))
        ));
    }

    #[test]
    fn to_ortholattice_is_boolean() {
        let ca = build_classical(&SetLattice::powerset(2).unwrap(), 2).unwrap();
        let l = ca.to_ortholattice().unwrap();
        assert_eq!(l.len(), 16);
        assert!(l.is_distributive());
    }
}
