//! The universal logic: the `**`-closed down-sets, with intersection as
//! meet, the closure of the union as coproduct, and star as
//! orthocomplement.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::OnceLock;

use rand::seq::index::sample;
use rand::Rng;

use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::lattice::OrthoLattice;
use crate::product::{build_product, ProductPoset};
use crate::report::{Law, Mode, Report, VerifyOptions};

pub const DEFAULT_MAX_CARRIER: usize = 100_000;

/// Largest carrier for which meet and coproduct tables are kept.
const TABLE_LIMIT: usize = 1 << 22;
const NONE: u32 = u32::MAX;

#[derive(Debug)]
struct Tables {
    meet: Vec<u32>,
    coproduct: Vec<u32>,
}

#[derive(Debug)]
pub struct UniversalLogic {
    poset: ProductPoset,
    carrier: Vec<DownSet>,
    index: HashMap<DownSet, usize>,
    star: Vec<Option<usize>>,
    tables: OnceLock<Option<Tables>>,
}

/// Meet-closure of the singleton stars, sorted by bit vector.
pub fn enumerate_universal(poset: ProductPoset, limit: usize) -> Result<UniversalLogic> {
    let gens: BTreeSet<DownSet> = (0..poset.len()).map(|t| poset.star_singleton(t)).collect();
    let gens: Vec<DownSet> = gens.into_iter().collect();
    let mut seen: BTreeSet<DownSet> = gens.iter().cloned().collect();
    if seen.len() > limit {
        return Err(Error::UniversalTooLarge {
            reached: seen.len(),
            limit,
        });
    }
    let mut queue: VecDeque<DownSet> = gens.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = DownSet(x.0.intersection(&g.0));
            if !seen.contains(&y) {
                seen.insert(y.clone());
                if seen.len() > limit {
                    return Err(Error::UniversalTooLarge {
                        reached: seen.len(),
                        limit,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(UniversalLogic::with_carrier(poset, seen.into_iter().collect()))
}

/// `U_κ(E)` for `κ` copies of `e`.
pub fn universal_of(e: &OrthoLattice, kappa: usize) -> Result<UniversalLogic> {
    enumerate_universal(build_product(vec![e.clone(); kappa])?, DEFAULT_MAX_CARRIER)
}

/// Result of the distributivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityCheck {
    pub distributive: bool,
    pub mode: Mode,
    /// Carrier indices `(x, y, z)` with `x ∧ (y ∐ z) ≠ (x ∧ y) ∐ (x ∧ z)`.
    pub witness: Option<[usize; 3]>,
    pub checked: u64,
}

impl UniversalLogic {
    /// Wraps an arbitrary list of down-sets without checking closure
    /// properties; [`verify_logic_axioms`](Self::verify_logic_axioms) reports
    /// what fails.
    pub fn with_carrier(poset: ProductPoset, mut carrier: Vec<DownSet>) -> Self {
        carrier.sort();
        carrier.dedup();
        let index: HashMap<DownSet, usize> =
            carrier.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let star = carrier
            .iter()
            .map(|x| index.get(&poset.star(x)).copied())
            .collect();
        UniversalLogic {
            poset,
            carrier,
            index,
            star,
            tables: OnceLock::new(),
        }
    }

    pub fn poset(&self) -> &ProductPoset {
        &self.poset
    }

    pub fn carrier(&self) -> &[DownSet] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn get(&self, i: usize) -> &DownSet {
        &self.carrier[i]
    }

    pub fn index_of(&self, x: &DownSet) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn require(&self, x: &DownSet) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::NotInCarrier(self.poset.format_down_set(x)))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.index_of(&self.poset.bottom_set())
    }

    pub fn top(&self) -> Option<usize> {
        self.index_of(&self.poset.full_set())
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.dleq(&self.carrier[i], &self.carrier[j])
    }

    /// Star of a member, if it lands in the carrier.
    pub fn star(&self, i: usize) -> Option<usize> {
        self.star[i]
    }

    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        match self.tables() {
            Some(t) => lookup(&t.meet, i * self.len() + j),
            None => self.index_of(&self.poset.dmeet([&self.carrier[i], &self.carrier[j]])),
        }
    }

    /// `(x ∨ y)**`
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        match self.tables() {
            Some(t) => lookup(&t.coproduct, i * self.len() + j),
            None => self.index_of(&self.coproduct_sets([&self.carrier[i], &self.carrier[j]])),
        }
    }

    /// `∐S = (∨S)**`; the result is not checked for membership.
    pub fn coproduct_sets<'a, I: IntoIterator<Item = &'a DownSet>>(&self, xs: I) -> DownSet {
        self.poset.closure(&self.poset.djoin(xs))
    }

    pub fn coproduct(&self, xs: &[DownSet]) -> Result<DownSet> {
        for x in xs {
            self.require(x)?;
        }
        let c = self.coproduct_sets(xs);
        self.require(&c)?;
        Ok(c)
    }

    pub fn coproduct_of(&self, members: &[usize]) -> Option<usize> {
        self.index_of(&self.coproduct_sets(members.iter().map(|&i| &self.carrier[i])))
    }

    pub fn meet_of(&self, members: &[usize]) -> Option<usize> {
        self.index_of(&self.poset.dmeet(members.iter().map(|&i| &self.carrier[i])))
    }

    fn tables(&self) -> Option<&Tables> {
        self.tables
            .get_or_init(|| {
                let n = self.len();
                if n * n > TABLE_LIMIT {
                    return None;
                }
                let mut meet = vec![NONE; n * n];
                let mut coproduct = vec![NONE; n * n];
                for i in 0..n {
                    for j in i..n {
                        let (x, y) = (&self.carrier[i], &self.carrier[j]);
                        let m = self.index_of(&self.poset.dmeet([x, y])).map_or(NONE, |m| m as u32);
                        let c = self.index_of(&self.coproduct_sets([x, y])).map_or(NONE, |c| c as u32);
                        meet[i * n + j] = m;
                        meet[j * n + i] = m;
                        coproduct[i * n + j] = c;
                        coproduct[j * n + i] = c;
                    }
                }
                Some(Tables { meet, coproduct })
            })
            .as_ref()
    }

    pub fn label(&self, i: usize) -> String {
        self.poset.format_down_set(&self.carrier[i])
    }

    /// Each member as the labels of its maximal antichain.
    pub fn export_carrier(&self) -> Vec<Vec<String>> {
        self.carrier.iter().map(|x| self.poset.antichain_labels(x)).collect()
    }

    /// The carrier as a validated [`OrthoLattice`]; element `i` is carrier
    /// member `i`.
    pub fn to_ortholattice(&self, name: impl Into<String>) -> Result<OrthoLattice> {
        let n = self.len();
        let labels: Vec<String> = (0..n).map(|i| self.label(i)).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        let ortho = (0..n)
            .map(|i| self.star(i).ok_or_else(|| Error::NotInCarrier(format!("star of {}", labels[i]))))
            .collect::<Result<Vec<_>>>()?;
        OrthoLattice::from_relation(name, labels, &pairs, ortho)
    }

    fn pairs(&self, opts: &VerifyOptions, law: &str) -> (Mode, Vec<(usize, usize)>) {
        let n = self.len();
        if n <= opts.exhaustive_limit {
            (Mode::Exhaustive, (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect())
        } else {
            let mut rng = opts.rng(law);
            let count = opts.samples.max(n);
            (
                Mode::Sampled,
                (0..count).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect(),
            )
        }
    }

    fn random_subset<R: Rng>(&self, rng: &mut R) -> Vec<usize> {
        let k = rng.gen_range(0..=5.min(self.len()));
        sample(rng, self.len(), k).into_vec()
    }

    fn fmt_members(&self, members: &[usize]) -> String {
        let parts: Vec<String> = members.iter().map(|&i| self.label(i)).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Orthocomplemented-lattice laws, closure properties, and the infinite
    /// De Morgan laws on random subfamilies.
    pub fn verify_logic_axioms(&self, opts: &VerifyOptions) -> Report {
        let p = &self.poset;
        let n = self.len();
        let mut report = Report::new(format!("universal logic over {}", factor_names(p)), opts.seed);
        let (bottom, top) = (self.bottom(), self.top());

        report.fact("contains bottom and top", bottom.is_some() && top.is_some(), || {
            format!("bottom present: {}, top present: {}", bottom.is_some(), top.is_some())
        });

        let mut principals = Law::new("contains every tuple", Mode::Exhaustive);
        for t in 0..p.len() {
            principals.check(self.index_of(&p.principal(t)).is_some(), || p.label(t));
        }
        report.add(principals);

        let mut fixed = Law::new("members are closure-fixed", Mode::Exhaustive);
        let mut star_closed = Law::new("closed under star", Mode::Exhaustive);
        let mut involution = Law::new("star is an involution", Mode::Exhaustive);
        let mut meet_compl = Law::new("x meet x* is bottom", Mode::Exhaustive);
        let mut join_compl = Law::new("x coproduct x* is top", Mode::Exhaustive);
        let mut generated = Law::new("member is coproduct of its letters", Mode::Exhaustive);
        for (i, x) in self.carrier.iter().enumerate() {
            fixed.check(&p.closure(x) == x, || self.label(i));
            let s = p.star(x);
            star_closed.check(self.star[i].is_some(), || {
                format!("{}* = {}", self.label(i), p.format_down_set(&s))
            });
            involution.check(&p.star(&s) == x, || self.label(i));
            meet_compl.check(p.dmeet([x, &s]) == p.bottom_set(), || self.label(i));
            join_compl.check(self.coproduct_sets([x, &s]) == p.full_set(), || self.label(i));
            let letters: Vec<DownSet> = p.maximals(x).0.iter().map(|&t| p.principal(t)).collect();
            generated.check(&self.coproduct_sets(&letters) == x, || self.label(i));
        }
        for l in [fixed, star_closed, involution, meet_compl, join_compl, generated] {
            report.add(l);
        }

        let (mode, pairs) = self.pairs(opts, "pairs");
        let mut meet_closed = Law::new("closed under meet", mode);
        let mut reversal = Law::new("star reverses order", mode);
        for &(i, j) in &pairs {
            let (x, y) = (&self.carrier[i], &self.carrier[j]);
            meet_closed.check(self.meet(i, j).is_some(), || {
                format!("{} meet {} = {}", self.label(i), self.label(j), p.format_down_set(&p.dmeet([x, y])))
            });
            if p.dleq(x, y) {
                reversal.check(p.dleq(&p.star(y), &p.star(x)), || {
                    format!("{} <= {}", self.label(i), self.label(j))
                });
            }
        }
        report.add(meet_closed);
        report.add(reversal);

        // greatest lower / least upper bounds by scanning the whole carrier
        let bound_pairs: Vec<(usize, usize)> = if n <= 128 {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
        } else {
            let mut rng = opts.rng("bounds");
            (0..opts.samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
        };
        let bound_mode = if n <= 128 { Mode::Exhaustive } else { Mode::Sampled };
        let mut glb = Law::new("meet is the greatest lower bound", bound_mode);
        let mut lub = Law::new("coproduct is the least upper bound", bound_mode);
        for &(i, j) in &bound_pairs {
            let m = self.meet(i, j);
            let c = self.join(i, j);
            glb.check(
                m.is_some_and(|m| {
                    (0..n).all(|z| (self.leq(z, i) && self.leq(z, j)) == self.leq(z, m))
                }),
                || format!("{} and {}", self.label(i), self.label(j)),
            );
            lub.check(
                c.is_some_and(|c| {
                    (0..n).all(|z| (self.leq(i, z) && self.leq(j, z)) == self.leq(c, z))
                }),
                || format!("{} and {}", self.label(i), self.label(j)),
            );
        }
        report.add(glb);
        report.add(lub);

        let mut rng = opts.rng("de morgan");
        let mut dm_join = Law::new("(coproduct S)* = meet of S*", Mode::Sampled);
        let mut dm_meet = Law::new("(meet S)* = coproduct of S*", Mode::Sampled);
        for _ in 0..opts.samples {
            let s = self.random_subset(&mut rng);
            let members: Vec<&DownSet> = s.iter().map(|&i| &self.carrier[i]).collect();
            let stars: Vec<DownSet> = members.iter().map(|x| p.star(x)).collect();
            let lhs = p.star(&self.coproduct_sets(members.iter().copied()));
            dm_join.check(lhs == p.dmeet(&stars), || self.fmt_members(&s));
            let lhs = p.star(&p.dmeet(members.iter().copied()));
            dm_meet.check(lhs == self.coproduct_sets(&stars), || self.fmt_members(&s));
        }
        report.add(dm_join);
        report.add(dm_meet);

        let mut rng = opts.rng("image");
        let mut image = Law::new("star of any down-set is a member", Mode::Sampled);
        for _ in 0..opts.samples {
            let y = p.sample_down_set(&mut rng);
            image.check(self.index_of(&p.star(&y)).is_some(), || p.format_down_set(&y));
        }
        report.add(image);
        report
    }

    /// Binary distributivity of the carrier. Triples lifted from a
    /// distributivity failure of some factor are tried first; then every
    /// triple when the carrier has at most 256 members, else a seeded sample.
    pub fn is_distributive_universal(&self, opts: &VerifyOptions) -> DistributivityCheck {
        let n = self.len();
        let p = &self.poset;
        let mut checked = 0u64;
        let mut fails = |x: usize, y: usize, z: usize| {
            checked += 1;
            let lhs = self.join(y, z).and_then(|yz| self.meet(x, yz));
            let rhs = match (self.meet(x, y), self.meet(x, z)) {
                (Some(a), Some(b)) => self.join(a, b),
                _ => None,
            };
            lhs.is_none() || lhs != rhs
        };

        for (alpha, f) in p.factors().iter().enumerate() {
            if let Some(w) = f.distributivity_witness() {
                let lift = |a: usize| {
                    let t = p.embed_index(alpha, a).expect("factor element");
                    self.index_of(&p.principal(t))
                };
                if let (Some(x), Some(y), Some(z)) = (lift(w.a), lift(w.b), lift(w.c)) {
                    if fails(x, y, z) {
                        return DistributivityCheck {
                            distributive: false,
                            mode: Mode::Exhaustive,
                            witness: Some([x, y, z]),
                            checked,
                        };
                    }
                }
            }
        }

        let (mode, triples): (Mode, Box<dyn Iterator<Item = [usize; 3]>>) = if n <= 256 {
            (
                Mode::Exhaustive,
                Box::new((0..n).flat_map(move |x| {
                    (0..n).flat_map(move |y| (0..n).map(move |z| [x, y, z]))
                })),
            )
        } else {
            let mut rng = opts.rng("distributivity");
            let count = opts.samples.max(10_000);
            let v: Vec<[usize; 3]> = (0..count)
                .map(|_| [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)])
                .collect();
            (Mode::Sampled, Box::new(v.into_iter()))
        };
        for [x, y, z] in triples {
            if fails(x, y, z) {
                return DistributivityCheck {
                    distributive: false,
                    mode,
                    witness: Some([x, y, z]),
                    checked,
                };
            }
        }
        DistributivityCheck {
            distributive: true,
            mode,
            witness: None,
            checked,
        }
    }

    /// Pseudo-complement laws for star on arbitrary down-sets, the infinite
    /// distributive law on the carrier, and the agreement of the carrier
    /// with the skeleton of the independently computed pseudo-complement.
    /// Meant for distributive factors; otherwise failures are expected and
    /// recorded.
    pub fn verify_p_algebra(&self, opts: &VerifyOptions) -> Report {
        let p = &self.poset;
        let mut report = Report::new(format!("p-algebra over {}", factor_names(p)), opts.seed);
        let zero = p.bottom_set();

        let all = p.enumerate_down_sets(1 << 12).ok();
        let (mode, pairs): (Mode, Vec<(DownSet, DownSet)>) = match &all {
            Some(all) if all.len() * all.len() <= 1 << 16 => (
                Mode::Exhaustive,
                all.iter()
                    .flat_map(|x| all.iter().map(move |y| (x.clone(), y.clone())))
                    .collect(),
            ),
            _ => {
                let mut rng = opts.rng("p-algebra");
                (
                    Mode::Sampled,
                    (0..opts.samples)
                        .map(|_| (p.sample_down_set(&mut rng), p.sample_down_set(&mut rng)))
                        .collect(),
                )
            }
        };

        let mut ax1 = Law::new("x meet (x meet y)* = x meet y*", mode);
        let mut ax2 = Law::new("x meet bottom* = x", mode);
        let mut pseudo = Law::new("star is the pseudo-complement", mode);
        for (x, y) in &pairs {
            let lhs = p.dmeet([x, &p.star(&p.dmeet([x, y]))]);
            let rhs = p.dmeet([x, &p.star(y)]);
            ax1.check(lhs == rhs, || {
                format!(
                    "x = {}, y = {}: {} vs {}",
                    p.format_down_set(x),
                    p.format_down_set(y),
                    p.format_down_set(&lhs),
                    p.format_down_set(&rhs)
                )
            });
            ax2.check(&p.dmeet([x, &p.star(&zero)]) == x, || p.format_down_set(x));
            pseudo.check(pseudo_complement(p, x) == p.star(x), || p.format_down_set(x));
        }
        report.add(ax1);
        report.add(ax2);
        report.fact("bottom** = bottom", p.closure(&zero) == zero, || {
            p.format_down_set(&p.closure(&zero))
        });
        report.add(pseudo);

        let n = self.len();
        let mut rng = opts.rng("infinite distributive law");
        let mut idl = Law::new("z meet coproduct x_i = coproduct (z meet x_i)", Mode::Sampled);
        for _ in 0..opts.samples {
            let z = rng.gen_range(0..n);
            let xs = self.random_subset(&mut rng);
            let lhs = p.dmeet([&self.carrier[z], &self.coproduct_sets(xs.iter().map(|&i| &self.carrier[i]))]);
            let meets: Vec<DownSet> = xs.iter().map(|&i| p.dmeet([&self.carrier[z], &self.carrier[i]])).collect();
            idl.check(lhs == self.coproduct_sets(&meets), || {
                format!("z = {}, x = {}", self.label(z), self.fmt_members(&xs))
            });
        }
        report.add(idl);

        // skeleton {x⋆ : x ∈ D} of the pseudo-complement versus the carrier
        match &all {
            Some(all) => {
                let skeleton: BTreeSet<DownSet> = all.iter().map(|x| pseudo_complement(p, x)).collect();
                let carrier: BTreeSet<DownSet> = self.carrier.iter().cloned().collect();
                let extra = skeleton.symmetric_difference(&carrier).next().cloned();
                let mut l = Law::new("skeleton equals carrier", Mode::Exhaustive);
                l.check(extra.is_none(), || p.format_down_set(extra.as_ref().unwrap()));
                report.add(l);
            }
            None => {
                let mut l = Law::new("skeleton equals carrier", Mode::Sampled);
                for (i, x) in self.carrier.iter().enumerate() {
                    let pc = pseudo_complement(p, &pseudo_complement(p, x));
                    l.check(&pc == x, || self.label(i));
                }
                let mut rng = opts.rng("skeleton");
                for _ in 0..opts.samples {
                    let y = p.sample_down_set(&mut rng);
                    let pc = pseudo_complement(p, &y);
                    l.check(self.index_of(&pc).is_some(), || p.format_down_set(&y));
                }
                report.add(l);
            }
        }
        report
    }
}

fn lookup(table: &[u32], k: usize) -> Option<usize> {
    match table[k] {
        NONE => None,
        v => Some(v as usize),
    }
}

fn factor_names(p: &ProductPoset) -> String {
    let names: Vec<&str> = p.factors().iter().map(|f| f.name()).collect();
    format!("[{}]", names.join(", "))
}

/// The largest down-set meeting `x` only in `0̂`.
pub fn pseudo_complement(p: &ProductPoset, x: &DownSet) -> DownSet {
    p.down_closure_of_letters((0..p.len()).filter(|&t| {
        p.down(t).intersection(x.bits()).count() == 1
    }))
}

/// Checks that `a ↦ ↓a` is an ortho-isomorphism from `e` onto `U_1(e)`
/// and returns it as a map from elements of `e` to carrier indices.
pub fn check_u1_iso(e: &OrthoLattice) -> Result<(UniversalLogic, Vec<usize>)> {
    let u = universal_of(e, 1)?;
    let p = u.poset();
    let fail = |msg: String| Err(Error::IsoFailure(msg));
    if u.len() != e.len() {
        return fail(format!("{} has {} elements, U_1 has {}", e.name(), e.len(), u.len()));
    }
    let mut map = Vec::with_capacity(e.len());
    for a in e.elements() {
        let t = p.embed_index(0, a)?;
        match u.index_of(&p.principal(t)) {
            Some(i) => map.push(i),
            None => return fail(format!("principal of {} is not closed", e.label(a))),
        }
    }
    let mut hit = vec![false; u.len()];
    for (a, &i) in map.iter().enumerate() {
        if std::mem::replace(&mut hit[i], true) {
            return fail(format!("{} collides with an earlier element", e.label(a)));
        }
    }
    for a in e.elements() {
        if u.star(map[a]) != Some(map[e.ortho(a)]) {
            return fail(format!("star of {} is not its orthocomplement", e.label(a)));
        }
        for b in e.elements() {
            if e.leq(a, b) != u.leq(map[a], map[b]) {
                return fail(format!("order of {} and {} not preserved", e.label(a), e.label(b)));
            }
        }
    }
    Ok((u, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{benzene, boolean, chain2, mo};
    use crate::product::build_product;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn opts() -> VerifyOptions {
        VerifyOptions::with_seed(7)
    }

    /// Image of star over every down-set, when they can all be listed.
    fn star_image(p: &ProductPoset) -> BTreeSet<DownSet> {
        p.enumerate_down_sets(1 << 20).unwrap().iter().map(|x| p.star(x)).collect()
    }

    #[test]
    fn small_sizes() {
        assert_eq!(universal_of(&chain2(), 1).unwrap().len(), 2);
        assert_eq!(universal_of(&boolean(2).unwrap(), 1).unwrap().len(), 4);
        let u = universal_of(&boolean(2).unwrap(), 2).unwrap();
        assert!(u.len() >= 16);
    }

    #[test]
    fn carrier_is_star_image() {
        for factors in [
            vec![boolean(2).unwrap(); 2],
            vec![mo(2).unwrap()],
            vec![chain2(), boolean(2).unwrap()],
            vec![benzene()],
        ] {
            let p = build_product(factors).unwrap();
            let image = star_image(&p);
            let u = enumerate_universal(p, 1000).unwrap();
            let carrier: BTreeSet<DownSet> = u.carrier().iter().cloned().collect();
            assert_eq!(carrier, image);
        }
    }

    #[test]
    fn limit_reported() {
        let p = build_product(vec![boolean(2).unwrap(); 2]).unwrap();
        assert!(matches!(
            enumerate_universal(p, 5),
            Err(Error::UniversalTooLarge { limit: 5, .. })
        ));
    }

    #[test]
    fn coproduct_examples() {
        let u = universal_of(&boolean(2).unwrap(), 2).unwrap();
        let p = u.poset();
        let a1 = p.principal(p.parse_label("(a,1)").unwrap());
        let a_1 = p.principal(p.parse_label("(a',1)").unwrap());
        assert_eq!(u.coproduct(&[a1.clone(), a_1]).unwrap(), p.full_set());
        assert_eq!(u.coproduct(&[a1.clone(), p.bottom_set()]).unwrap(), a1);
        for (i, x) in u.carrier().iter().enumerate() {
            let s = u.get(u.star(i).unwrap()).clone();
            assert_eq!(u.coproduct(&[x.clone(), s]).unwrap(), p.full_set());
        }
        let not_closed = p.djoin([&p.principal(1), &p.principal(2)]);
        if u.index_of(&not_closed).is_none() {
            assert!(matches!(u.coproduct(&[not_closed]), Err(Error::NotInCarrier(_))));
        }
    }

    #[test]
    fn axioms_hold() {
        for (e, k) in [(boolean(2).unwrap(), 1), (mo(2).unwrap(), 2), (boolean(2).unwrap(), 2)] {
            let r = universal_of(&e, k).unwrap().verify_logic_axioms(&opts());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn dropping_bottom_breaks_meet_closure() {
        let u = universal_of(&boolean(2).unwrap(), 2).unwrap();
        let bottom = u.poset().bottom_set();
        let rest: Vec<DownSet> = u.carrier().iter().filter(|x| **x != bottom).cloned().collect();
        let broken = UniversalLogic::with_carrier(u.poset().clone(), rest);
        let r = broken.verify_logic_axioms(&opts());
        let e = r.entry("closed under meet").unwrap();
        assert!(!e.pass);
        assert!(e.witness.is_some());
    }

    #[test]
    fn u1_isomorphisms() {
        for e in [chain2(), boolean(2).unwrap(), boolean(3).unwrap(), mo(2).unwrap(), mo(3).unwrap(), benzene()] {
            let (u, map) = check_u1_iso(&e).unwrap();
            assert_eq!(map.len(), e.len());
            assert_eq!(u.len(), e.len());
        }
    }

    #[test]
    fn distributivity_transfers() {
        let d = universal_of(&boolean(2).unwrap(), 2).unwrap().is_distributive_universal(&opts());
        assert!(d.distributive);
        assert_eq!(d.mode, Mode::Exhaustive);
        let u = universal_of(&mo(2).unwrap(), 2).unwrap();
        let d = u.is_distributive_universal(&opts());
        assert!(!d.distributive);
        let [x, y, z] = d.witness.unwrap();
        // each member is a lifted letter (e,1) and the triple fails in MO2 itself
        let e = mo(2).unwrap();
        let lifted: Vec<usize> = [x, y, z]
            .iter()
            .map(|&i| {
                let m = u.poset().maximals(u.get(i)).0;
                assert_eq!(m.len(), 1);
                assert_eq!(u.poset().component(m[0], 1), e.top());
                u.poset().component(m[0], 0)
            })
            .collect();
        let (a, b, c) = (lifted[0], lifted[1], lifted[2]);
        assert_ne!(e.meet(a, e.join(b, c)), e.join(e.meet(a, b), e.meet(a, c)));
        assert!(universal_of(&chain2(), 3).unwrap().is_distributive_universal(&opts()).distributive);
    }

    #[test]
    fn p_algebra_on_boolean_square() {
        let r = universal_of(&boolean(2).unwrap(), 2).unwrap().verify_p_algebra(&opts());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn p_algebra_fails_for_mo2() {
        let u = universal_of(&mo(2).unwrap(), 1).unwrap();
        let r = u.verify_p_algebra(&opts());
        assert!(!r.entry("x meet (x meet y)* = x meet y*").unwrap().pass);
        let p = u.poset();
        let x = p.principal(p.parse_label("(p)").unwrap());
        let y = p.principal(p.parse_label("(q)").unwrap());
        let lhs = p.dmeet([&x, &p.star(&p.dmeet([&x, &y]))]);
        let rhs = p.dmeet([&x, &p.star(&y)]);
        assert_eq!(lhs, x);
        assert_eq!(rhs, p.bottom_set());
    }

    #[test]
    fn to_ortholattice_round_trip() {
        let u = universal_of(&mo(2).unwrap(), 1).unwrap();
        let l = u.to_ortholattice("U").unwrap();
        assert!(crate::lattice::find_iso(&mo(2).unwrap(), &l).is_some());
    }

    #[test]
    fn star_image_sampled_membership() {
        let u = universal_of(&mo(2).unwrap(), 2).unwrap();
        let p = u.poset();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let y = p.sample_down_set(&mut rng);
            assert!(u.index_of(&p.star(&y)).is_some());
        }
    }
}
