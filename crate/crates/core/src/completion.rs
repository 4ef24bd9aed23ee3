//! The event space completion `E_L` of an ortholattice `L`: the closed
//! down-sets of `L` itself.
//!
//! Every finite lattice is complete, so for the inputs handled here the
//! inclusion `a ↦ ↓a` is always an isomorphism. The construction does not
//! assume this; it builds the completion and searches for the isomorphism.

use crate::downset::DownSet;
use crate::error::{Error, Result};
use crate::lattice::{find_iso, OrthoLattice};
use crate::product::build_product;
use crate::report::{Law, Mode, Report, VerifyOptions};
use crate::universal::{enumerate_universal, UniversalLogic, DEFAULT_MAX_CARRIER};

#[derive(Debug)]
pub struct CompletionResult {
    pub source: OrthoLattice,
    pub completed: UniversalLogic,
    /// Carrier index of `↓a` for each `a`, when that set is closed.
    pub inclusion: Vec<Option<usize>>,
    /// An ortho-isomorphism from `source` onto the completion, if any.
    pub iso: Option<Vec<usize>>,
}

pub fn event_space_completion(l: &OrthoLattice) -> Result<CompletionResult> {
    let poset = build_product(vec![l.clone()])?;
    let completed = enumerate_universal(poset, DEFAULT_MAX_CARRIER)?;
    let p = completed.poset();
    let inclusion = l
        .elements()
        .map(|a| {
            let t = p.embed_index(0, a).expect("element of L");
            completed.index_of(&p.principal(t))
        })
        .collect();
    let as_lattice = completed.to_ortholattice(format!("E_{}", l.name()))?;
    let iso = find_iso(l, &as_lattice);
    Ok(CompletionResult {
        source: l.clone(),
        completed,
        inclusion,
        iso,
    })
}

impl CompletionResult {
    /// Whether the inclusion itself is the isomorphism.
    pub fn inclusion_is_iso(&self) -> bool {
        let u = &self.completed;
        let l = &self.source;
        if u.len() != l.len() || self.inclusion.iter().any(Option::is_none) {
            return false;
        }
        let inc: Vec<usize> = self.inclusion.iter().map(|i| i.unwrap()).collect();
        l.elements().all(|a| {
            u.star(inc[a]) == Some(inc[l.ortho(a)])
                && l.elements().all(|b| l.leq(a, b) == u.leq(inc[a], inc[b]))
        })
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new(format!("event space completion of {}", self.source.name()), 0);
        r.fact("carrier size equals source size", self.completed.len() == self.source.len(), || {
            format!("{} vs {}", self.completed.len(), self.source.len())
        });
        r.fact("isomorphic to source", self.iso.is_some(), String::new);
        r.fact("inclusion is an ortho-isomorphism", self.inclusion_is_iso(), String::new);
        r
    }
}

/// Result of lifting an isomorphism `L ≅ L'` to the completions.
#[derive(Debug)]
pub struct Lifted {
    /// Carrier index in `E_L'` of the image of each member of `E_L`.
    pub map: Vec<usize>,
    pub report: Report,
}

/// Lifts an isomorphism `χ: L → L'` letterwise to down-sets and verifies
/// that it is an ortho-isomorphism `E_L → E_L'`.
pub fn completion_functorial(l: &OrthoLattice, lp: &OrthoLattice) -> Result<Lifted> {
    let chi = find_iso(l, lp).ok_or_else(|| Error::NotIsomorphic(l.name().into(), lp.name().into()))?;
    let c = event_space_completion(l)?;
    let cp = event_space_completion(lp)?;
    let (u, up) = (&c.completed, &cp.completed);
    let (p, pp) = (u.poset(), up.poset());

    let lift = |x: &DownSet| -> DownSet {
        pp.down_closure_of_letters(x.iter().map(|t| {
            let a = p.component(t, 0);
            pp.tuple_index(&[chi[a]]).expect("element of L'")
        }))
    };

    let mut report = Report::new(format!("lifted isomorphism {} -> {}", l.name(), lp.name()), 0);
    let mut lands = Law::new("lift lands in the target completion", Mode::Exhaustive);
    let images: Vec<Option<usize>> = u
        .carrier()
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let y = up.index_of(&lift(x));
            lands.check(y.is_some(), || u.label(i));
            y
        })
        .collect();
    let failed = lands.failed();
    report.add(lands);
    if failed {
        return Ok(Lifted {
            map: Vec::new(),
            report,
        });
    }
    let map: Vec<usize> = images.into_iter().map(Option::unwrap).collect();

    let mut seen = vec![false; up.len()];
    let mut bijective = Law::new("lift is a bijection", Mode::Exhaustive);
    for (i, &y) in map.iter().enumerate() {
        bijective.check(!std::mem::replace(&mut seen[y], true), || u.label(i));
    }
    bijective.check(u.len() == up.len(), || format!("{} vs {} members", u.len(), up.len()));
    report.add(bijective);

    let mut ortho = Law::new("lift commutes with star", Mode::Exhaustive);
    let mut order = Law::new("lift preserves and reflects order", Mode::Exhaustive);
    for i in 0..u.len() {
        ortho.check(u.star(i).map(|s| map[s]) == up.star(map[i]), || u.label(i));
        for j in 0..u.len() {
            order.check(u.leq(i, j) == up.leq(map[i], map[j]), || {
                format!("{} and {}", u.label(i), u.label(j))
            });
        }
    }
    report.add(ortho);
    report.add(order);
    Ok(Lifted { map, report })
}

/// Distributivity of `E_L` against `L`, and the meet and coproduct of
/// principal down-sets against the meet and join of `L`.
pub fn completion_distributivity(l: &OrthoLattice, opts: &VerifyOptions) -> Result<Report> {
    let c = event_space_completion(l)?;
    let u = &c.completed;
    let p = u.poset();
    let mut report = Report::new(format!("distributivity of E_{}", l.name()), opts.seed);

    let d = u.is_distributive_universal(opts);
    let source = l.is_distributive();
    report.fact("completion distributive iff source distributive", d.distributive == source, || {
        format!("source: {source}, completion: {}", d.distributive)
    });

    let principal = |a: usize| p.principal(p.tuple_index(&[a]).expect("element of L"));
    let mut meets = Law::new("meet of principals is principal of meet", Mode::Exhaustive);
    let mut joins = Law::new("coproduct of principals is principal of join", Mode::Exhaustive);
    for a in l.elements() {
        for b in l.elements() {
            let show = || format!("{} and {}", l.label(a), l.label(b));
            meets.check(p.dmeet([&principal(a), &principal(b)]) == principal(l.meet(a, b)), show);
            joins.check(u.coproduct_sets([&principal(a), &principal(b)]) == principal(l.join(a, b)), show);
        }
    }
    report.add(meets);
    report.add(joins);

    let mut de_morgan = Law::new("x coproduct y = (x* meet y*)*", Mode::Exhaustive);
    for i in 0..u.len() {
        for j in 0..u.len() {
            let (x, y) = (u.get(i), u.get(j));
            let rhs = p.star(&p.dmeet([&p.star(x), &p.star(y)]));
            de_morgan.check(u.coproduct_sets([x, y]) == rhs, || {
                format!("{} and {}", u.label(i), u.label(j))
            });
        }
    }
    report.add(de_morgan);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{benzene, boolean, chain2, mo};

    fn catalog() -> Vec<OrthoLattice> {
        vec![
            chain2(),
            boolean(2).unwrap(),
            boolean(3).unwrap(),
            mo(1).unwrap(),
            mo(2).unwrap(),
            mo(3).unwrap(),
            benzene(),
        ]
    }

    #[test]
    fn completion_is_iso_for_finite_lattices() {
        for l in catalog() {
            let c = event_space_completion(&l).unwrap();
            assert!(c.iso.is_some(), "{}", l.name());
            assert!(c.report().passed(), "{}", c.report());
        }
    }

    #[test]
    fn functoriality() {
        let lifted = completion_functorial(&boolean(2).unwrap(), &mo(1).unwrap()).unwrap();
        assert!(lifted.report.passed(), "{}", lifted.report);
        let m = mo(2).unwrap();
        let same = completion_functorial(&m, &m).unwrap();
        assert_eq!(same.map, (0..m.len()).collect::<Vec<_>>());
        assert_eq!(
            completion_functorial(&boolean(2).unwrap(), &mo(2).unwrap()).unwrap_err(),
            Error::NotIsomorphic("B2".into(), "MO2".into())
        );
    }

    #[test]
    fn distributivity_agrees() {
        for l in catalog() {
            let r = completion_distributivity(&l, &VerifyOptions::default()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
