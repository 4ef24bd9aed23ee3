use super::OrthoLattice;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Invariant {
    rank: usize,
    up: usize,
    down: usize,
    orbit: usize,
}

fn invariants(l: &OrthoLattice) -> Vec<Invariant> {
    l.elements()
        .map(|x| Invariant {
            rank: l.rank(x),
            up: l.up_set(x).count(),
            down: l.down_set(x).count(),
            orbit: if l.ortho(x) == x { 1 } else { 2 },
        })
        .collect()
}

/// Finds an ortho-isomorphism `l1 → l2`: a bijection preserving `≤` in both
/// directions and commuting with the orthocomplements.
///
/// Elements of `l1` are assigned in index order and candidates in `l2` are
/// tried in index order, so the result is the lexicographically first
/// isomorphism.
pub fn find_iso(l1: &OrthoLattice, l2: &OrthoLattice) -> Option<Vec<usize>> {
    let n = l1.len();
    if n != l2.len() {
        return None;
    }
    let inv1 = invariants(l1);
    let inv2 = invariants(l2);
    let mut sorted1 = inv1.iter().map(|i| (i.rank, i.up, i.down, i.orbit)).collect::<Vec<_>>();
    let mut sorted2 = inv2.iter().map(|i| (i.rank, i.up, i.down, i.orbit)).collect::<Vec<_>>();
    sorted1.sort_unstable();
    sorted2.sort_unstable();
    if sorted1 != sorted2 {
        return None;
    }

    let mut search = Search {
        l1,
        l2,
        inv1: &inv1,
        inv2: &inv2,
        map: vec![None; n],
        used: vec![false; n],
    };
    search.extend(0).then(|| search.map.into_iter().map(|m| m.unwrap()).collect())
}

struct Search<'a> {
    l1: &'a OrthoLattice,
    l2: &'a OrthoLattice,
    inv1: &'a [Invariant],
    inv2: &'a [Invariant],
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, x: usize, y: usize) -> bool {
        if self.used[y] || self.inv1[x] != self.inv2[y] {
            return false;
        }
        self.map.iter().enumerate().all(|(z, m)| match m {
            Some(w) => {
                self.l1.leq(x, z) == self.l2.leq(y, *w) && self.l1.leq(z, x) == self.l2.leq(*w, y)
            }
            None => true,
        })
    }

    fn assign(&mut self, x: usize, y: usize) {
        self.map[x] = Some(y);
        self.used[y] = true;
    }

    fn unassign(&mut self, x: usize, y: usize) {
        self.map[x] = None;
        self.used[y] = false;
    }

    fn extend(&mut self, from: usize) -> bool {
        let Some(x) = (from..self.map.len()).find(|&x| self.map[x].is_none()) else {
            return true;
        };
        let ox = self.l1.ortho(x);
        for y in 0..self.l2.len() {
            if !self.consistent(x, y) {
                continue;
            }
            self.assign(x, y);
            // ortho(x) is forced to ortho(y)
            let oy = self.l2.ortho(y);
            let found = if ox == x {
                oy == y && self.extend(x + 1)
            } else if let Some(m) = self.map[ox] {
                m == oy && self.extend(x + 1)
            } else if self.consistent(ox, oy) {
                self.assign(ox, oy);
                let found = self.extend(x + 1);
                if !found {
                    self.unassign(ox, oy);
                }
                found
            } else {
                false
            };
            if found {
                return true;
            }
            self.unassign(x, y);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{benzene, boolean, mo};

    fn is_ortho_iso(l1: &OrthoLattice, l2: &OrthoLattice, f: &[usize]) -> bool {
        let mut seen = vec![false; l2.len()];
        for &y in f {
            if std::mem::replace(&mut seen[y], true) {
                return false;
            }
        }
        l1.elements().all(|x| {
            f[l1.ortho(x)] == l2.ortho(f[x]) && l1.elements().all(|z| l1.leq(x, z) == l2.leq(f[x], f[z]))
        })
    }

    #[test]
    fn b2_to_itself_is_identity() {
        let b2 = boolean(2).unwrap();
        let f = find_iso(&b2, &b2).unwrap();
        assert_eq!(f, vec![0, 1, 2, 3]);
    }

    #[test]
    fn b2_is_mo1() {
        let b2 = boolean(2).unwrap();
        let mo1 = mo(1).unwrap();
        let f = find_iso(&b2, &mo1).unwrap();
        assert!(is_ortho_iso(&b2, &mo1, &f));
    }

    #[test]
    fn size_mismatch() {
        assert!(find_iso(&boolean(2).unwrap(), &mo(2).unwrap()).is_none());
    }

    #[test]
    fn mo3_vs_benzene_like_sizes() {
        // MO2 and O6 have six elements but different shapes.
        assert!(find_iso(&mo(2).unwrap(), &benzene()).is_none());
        let b3 = boolean(3).unwrap();
        let mo3 = mo(3).unwrap();
        assert!(find_iso(&b3, &mo3).is_none());
    }

    #[test]
    fn finds_nontrivial_automorphism_target() {
        // relabel MO2 by swapping the pairs (p,p') <-> (q,q')
        let l = mo(2).unwrap();
        let perm = [0, 3, 4, 1, 2, 5];
        let labels = (0..6).map(|i| l.label(perm[i]).to_string()).collect();
        let pairs: Vec<_> = l.covers().into_iter().map(|(x, y)| (perm[x], perm[y])).collect();
        let ortho = (0..6).map(|i| perm[l.ortho(perm[i])]).collect();
        let l2 = OrthoLattice::from_relation("MO2'", labels, &pairs, ortho).unwrap();
        let f = find_iso(&l, &l2).unwrap();
        assert!(is_ortho_iso(&l, &l2, &f));
    }
}
