//! Abstract finite lattices: construction from an order relation, the named
//! families (chains, M_n, hypercubes), classification predicates with
//! forbidden-sublattice witnesses, products, duals, isomorphism testing and
//! Hasse cover edges.

use crate::error::{Error, Result};
use crate::ideals::IdealSet;

/// Finite lattice over elements `0..n` with a full order matrix, derived
/// meet/join tables and Hasse cover edges (the transitive reduction).
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    heights: Vec<usize>,
}

/// A forbidden 5-element sublattice, reported as a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenKind {
    Pentagon,
    Diamond,
}

#[derive(Debug, Clone)]
pub struct Forbidden {
    pub kind: ForbiddenKind,
    pub elements: [usize; 5],
}

impl FiniteLattice {
    /// Builds a lattice from an order matrix, or reports which axiom or
    /// which pair of elements fails.
    pub fn from_order(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::NotAPoset("a bounded lattice cannot be empty".into()));
        }
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::NotAPoset(format!("order matrix is not {n}x{n}")));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::NotAPoset(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::NotAPoset(format!("not antisymmetric at ({i}, {j})")));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::NotAPoset(format!(
                            "not transitive at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = unique_bound(&leq, a, b, true)
                    .ok_or(Error::NotALattice { a, b, kind: "meet" })?;
                join[a][b] = unique_bound(&leq, a, b, false)
                    .ok_or(Error::NotALattice { a, b, kind: "join" })?;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 0..n {
            bottom = meet[bottom][x];
            top = join[top][x];
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || !leq[x][y] {
                    continue;
                }
                let between = (0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]);
                if !between {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        // longest chain from the bottom, relaxed over the cover DAG
        let mut heights = vec![0usize; n];
        for _ in 0..n {
            for &(x, y) in &covers {
                heights[y] = heights[y].max(heights[x] + 1);
            }
        }
        Ok(FiniteLattice { labels, leq, covers, meet, join, bottom, top, heights })
    }

    /// Recaptures the order from cover edges (reflexive-transitive closure)
    /// and validates the result.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(Error::NotAPoset(format!("cover ({x}, {y}) out of range")));
            }
            leq[x][y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FiniteLattice::from_order(labels, leq)
    }

    /// The n-element chain.
    pub fn chain(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadParameter("chain needs n >= 1".into()));
        }
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        FiniteLattice::from_order(labels, leq)
    }

    /// The length-2 lattice with n >= 3 atoms (n + 2 elements).
    pub fn m_lattice(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::BadParameter("M_n needs n >= 3".into()));
        }
        let size = n + 2;
        let mut labels = vec!["0".to_string()];
        labels.extend((1..=n).map(|i| format!("a{i}")));
        labels.push("1".to_string());
        let mut leq = vec![vec![false; size]; size];
        for i in 0..size {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][size - 1] = true;
        }
        FiniteLattice::from_order(labels, leq)
    }

    /// The boolean lattice of subsets of an n-set (2^n elements, n <= 8).
    pub fn cube(n: usize) -> Result<Self> {
        if n > 8 {
            return Err(Error::BadParameter("cube supported up to n = 8".into()));
        }
        let size = 1usize << n;
        let labels = (0..size).map(|m| format!("{m:0width$b}", width = n.max(1))).collect();
        let leq = (0..size)
            .map(|a| (0..size).map(|b| a & b == a).collect())
            .collect();
        FiniteLattice::from_order(labels, leq)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Hasse edges, in deterministic (lower, upper) index order.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Longest chain length (number of jumps).
    pub fn length(&self) -> usize {
        self.heights[self.top]
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.covers.iter().filter(|&&(x, _)| x == self.bottom).map(|&(_, y)| y).collect()
    }

    /// Modular law evaluated on all triples.
    pub fn modular_by_law(&self) -> bool {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if !self.leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if self.meet[b][self.join[a][c]] != self.join[a][self.meet[b][c]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Distributive law (D1) evaluated on all triples.
    pub fn distributive_by_law(&self) -> bool {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.join[a][self.meet[b][c]]
                        != self.meet[self.join[a][b]][self.join[a][c]]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First pentagon (and optionally diamond) sublattice in subset order.
    pub fn find_forbidden(&self, diamonds_too: bool) -> Option<Forbidden> {
        let n = self.size();
        let mut sub = [0usize; 5];
        self.search_subsets(0, 0, &mut sub, n, diamonds_too)
    }

    fn search_subsets(
        &self,
        depth: usize,
        start: usize,
        sub: &mut [usize; 5],
        n: usize,
        diamonds_too: bool,
    ) -> Option<Forbidden> {
        if depth == 5 {
            return self.classify_subset(sub, diamonds_too);
        }
        for x in start..n {
            sub[depth] = x;
            if let Some(f) = self.search_subsets(depth + 1, x + 1, sub, n, diamonds_too) {
                return Some(f);
            }
        }
        None
    }

    fn classify_subset(&self, sub: &[usize; 5], diamonds_too: bool) -> Option<Forbidden> {
        // closed under meet and join?
        for i in 0..5 {
            for j in i + 1..5 {
                if !sub.contains(&self.meet[sub[i]][sub[j]])
                    || !sub.contains(&self.join[sub[i]][sub[j]])
                {
                    return None;
                }
            }
        }
        let bot = *sub.iter().find(|&&x| sub.iter().all(|&y| self.leq[x][y]))?;
        let top = *sub.iter().find(|&&x| sub.iter().all(|&y| self.leq[y][x]))?;
        let mids: Vec<usize> = sub.iter().copied().filter(|&x| x != bot && x != top).collect();
        if mids.len() != 3 {
            return None;
        }
        let comparable: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .filter(|&(i, j)| self.leq[mids[i]][mids[j]] || self.leq[mids[j]][mids[i]])
            .collect();
        match comparable.len() {
            0 if diamonds_too => Some(Forbidden {
                kind: ForbiddenKind::Diamond,
                elements: [bot, mids[0], mids[1], mids[2], top],
            }),
            1 => {
                let (i, j) = comparable[0];
                let (x, y) =
                    if self.leq[mids[i]][mids[j]] { (mids[i], mids[j]) } else { (mids[j], mids[i]) };
                let c = mids.iter().copied().find(|&m| m != x && m != y).unwrap();
                Some(Forbidden { kind: ForbiddenKind::Pentagon, elements: [bot, x, y, c, top] })
            }
            _ => None,
        }
    }

    /// Modularity, decided by the law and cross-checked against pentagon
    /// search; the two must agree.
    pub fn modularity(&self) -> (bool, Option<Forbidden>) {
        let law = self.modular_by_law();
        let witness = self.find_forbidden(false);
        assert_eq!(law, witness.is_none(), "modular law and pentagon search disagree");
        (law, witness)
    }

    /// Distributivity, decided by the law and cross-checked against
    /// pentagon-or-diamond search; the two must agree.
    pub fn distributivity(&self) -> (bool, Option<Forbidden>) {
        let law = self.distributive_by_law();
        let witness = self.find_forbidden(true);
        assert_eq!(law, witness.is_none(), "distributive law and sublattice search disagree");
        (law, witness)
    }

    pub fn is_modular(&self) -> bool {
        self.modularity().0
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity().0
    }

    pub fn is_complemented(&self) -> bool {
        (0..self.size()).all(|a| {
            (0..self.size())
                .any(|b| self.join[a][b] == self.top && self.meet[a][b] == self.bottom)
        })
    }

    /// Boolean = complemented and distributive; when true the lattice is
    /// verified to be a hypercube of the matching rank.
    pub fn is_boolean(&self) -> bool {
        let b = self.is_complemented() && self.is_distributive();
        if b {
            let k = self.size().trailing_zeros() as usize;
            assert!(self.size().is_power_of_two(), "boolean lattice of non-power-of-two size");
            assert!(
                self.is_isomorphic(&FiniteLattice::cube(k).expect("rank fits")),
                "boolean lattice not isomorphic to the hypercube of its rank"
            );
        }
        b
    }

    /// Diamond property: every pair of distinct atoms sits in an M_3.
    pub fn has_dp(&self) -> bool {
        let atoms = self.atoms();
        for (i, &a) in atoms.iter().enumerate() {
            for &b in atoms.iter().skip(i + 1) {
                let j = self.join[a][b];
                let found = (0..self.size()).any(|c| {
                    c != a
                        && c != b
                        && c != self.bottom
                        && c != j
                        && self.meet[a][c] == self.bottom
                        && self.meet[b][c] == self.bottom
                        && self.join[a][c] == j
                        && self.join[b][c] == j
                });
                if !found {
                    return false;
                }
            }
        }
        true
    }

    /// Direct product with componentwise order.
    pub fn product(&self, other: &FiniteLattice) -> FiniteLattice {
        let n1 = self.size();
        let n2 = other.size();
        let mut labels = Vec::with_capacity(n1 * n2);
        for i in 0..n1 {
            for j in 0..n2 {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        let mut leq = vec![vec![false; n1 * n2]; n1 * n2];
        for i1 in 0..n1 {
            for j1 in 0..n2 {
                for i2 in 0..n1 {
                    for j2 in 0..n2 {
                        leq[i1 * n2 + j1][i2 * n2 + j2] = self.leq[i1][i2] && other.leq[j1][j2];
                    }
                }
            }
        }
        FiniteLattice::from_order(labels, leq).expect("product of lattices is a lattice")
    }

    /// Order-reversed lattice; the Hasse diagram turns upside down.
    pub fn dual(&self) -> FiniteLattice {
        let n = self.size();
        let leq = (0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect();
        FiniteLattice::from_order(self.labels.clone(), leq).expect("dual of a lattice")
    }

    fn invariants(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.size();
        (0..n)
            .map(|x| {
                let up = self.covers.iter().filter(|&&(a, _)| a == x).count();
                let down = self.covers.iter().filter(|&&(_, b)| b == x).count();
                let below = (0..n).filter(|&y| self.leq[y][x]).count();
                (self.heights[x], up, down, below)
            })
            .collect()
    }

    /// Order isomorphism onto `other`, if one exists. Backtracking over
    /// elements with matching (height, degree, ideal-size) invariants.
    pub fn isomorphism(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.size() != other.size() {
            return None;
        }
        let inv_a = self.invariants();
        let inv_b = other.invariants();
        {
            let mut sa = inv_a.clone();
            let mut sb = inv_b.clone();
            sa.sort_unstable();
            sb.sort_unstable();
            if sa != sb {
                return None;
            }
        }
        let n = self.size();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend_iso(0, &mut map, &mut used, other, &inv_a, &inv_b) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_iso(
        &self,
        x: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        other: &FiniteLattice,
        inv_a: &[(usize, usize, usize, usize)],
        inv_b: &[(usize, usize, usize, usize)],
    ) -> bool {
        let n = self.size();
        if x == n {
            return true;
        }
        for y in 0..n {
            if used[y] || inv_a[x] != inv_b[y] {
                continue;
            }
            let consistent = (0..x).all(|p| {
                self.leq[p][x] == other.leq[map[p]][y] && self.leq[x][p] == other.leq[y][map[p]]
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend_iso(x + 1, map, used, other, inv_a, inv_b) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism(other).is_some()
    }
}

fn unique_bound(leq: &[Vec<bool>], a: usize, b: usize, lower: bool) -> Option<usize> {
    let n = leq.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&z| if lower { leq[z][a] && leq[z][b] } else { leq[a][z] && leq[b][z] })
        .collect();
    bounds
        .iter()
        .copied()
        .find(|&m| bounds.iter().all(|&z| if lower { leq[z][m] } else { leq[m][z] }))
}

/// Converts a completed ideal enumeration into its inclusion lattice.
/// Elements are labeled `d<dim>.<index>` within each dimension.
pub fn lattice_of(ids: &IdealSet) -> Result<FiniteLattice> {
    if !ids.is_complete() {
        return Err(Error::NotComplete("lattice_of requires a complete enumeration".into()));
    }
    let mut members: Vec<_> = ids.ideals.iter().collect();
    members.sort_by_key(|s| (s.dim(), (*s).clone()));
    let mut labels = Vec::with_capacity(members.len());
    let mut per_dim = std::collections::BTreeMap::new();
    for m in &members {
        let k = per_dim.entry(m.dim()).or_insert(0usize);
        labels.push(format!("d{}.{}", m.dim(), k));
        *k += 1;
    }
    let n = members.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = members[i].leq(members[j])?;
        }
    }
    FiniteLattice::from_order(labels, leq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn n5() -> FiniteLattice {
        // 0 < x < y < 1, 0 < c < 1, c incomparable to x and y
        let labels = vec!["0", "x", "y", "c", "1"].into_iter().map(String::from).collect();
        FiniteLattice::from_covers(labels, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn from_order_examples() {
        let one = FiniteLattice::chain(1).unwrap();
        assert_eq!(one.size(), 1);
        assert_eq!(one.bottom(), one.top());

        // bottom, two incomparable middles, top: the 4-element boolean lattice
        let q2 = FiniteLattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "1".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        assert!(q2.is_isomorphic(&FiniteLattice::cube(2).unwrap()));

        // two maximal elements above two incomparable middles: join fails
        let bad = FiniteLattice::from_covers(
            vec!["0".into(), "a".into(), "b".into(), "t1".into(), "t2".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)],
        );
        assert!(matches!(bad, Err(Error::NotALattice { kind: "join", .. })));
    }

    #[test]
    fn constructors() {
        let c2 = FiniteLattice::chain(2).unwrap();
        assert_eq!(c2.size(), 2);
        assert_eq!(c2.hasse_edges().len(), 1);
        assert_eq!(FiniteLattice::chain(5).unwrap().length(), 4);

        let m3 = FiniteLattice::m_lattice(3).unwrap();
        assert_eq!(m3.size(), 5);
        assert_eq!(m3.length(), 2);
        assert_eq!(m3.atoms().len(), 3);

        let q0 = FiniteLattice::cube(0).unwrap();
        assert_eq!(q0.size(), 1);
        assert_eq!(FiniteLattice::cube(3).unwrap().atoms().len(), 3);

        assert!(FiniteLattice::chain(0).is_err());
        assert!(FiniteLattice::m_lattice(2).is_err());
    }

    #[test]
    fn modular_and_distributive_classification() {
        let (modular, witness) = n5().modularity();
        assert!(!modular);
        assert_eq!(witness.unwrap().kind, ForbiddenKind::Pentagon);

        let m3 = FiniteLattice::m_lattice(3).unwrap();
        assert!(m3.is_modular());
        let (dist, witness) = m3.distributivity();
        assert!(!dist);
        assert_eq!(witness.unwrap().kind, ForbiddenKind::Diamond);

        let q3 = FiniteLattice::cube(3).unwrap();
        assert!(q3.is_modular() && q3.is_distributive());
    }

    #[test]
    fn complemented_boolean_dp() {
        assert!(!FiniteLattice::chain(3).unwrap().is_complemented());
        let m4 = FiniteLattice::m_lattice(4).unwrap();
        assert!(m4.is_complemented());
        assert!(m4.has_dp());
        assert!(!m4.is_boolean());
        assert!(FiniteLattice::cube(2).unwrap().is_boolean());
    }

    #[test]
    fn product_and_dual() {
        let c2 = FiniteLattice::chain(2).unwrap();
        let prod = c2.product(&c2);
        assert!(prod.is_isomorphic(&FiniteLattice::cube(2).unwrap()));
        let q3 = FiniteLattice::cube(3).unwrap();
        assert!(q3.product(&FiniteLattice::chain(1).unwrap()).is_isomorphic(&q3));
        for l in [FiniteLattice::chain(4).unwrap(), q3, FiniteLattice::m_lattice(3).unwrap()] {
            assert!(l.dual().is_isomorphic(&l)); // all selfdual
        }
        assert!(n5().dual().is_isomorphic(&n5()));
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = FiniteLattice::chain(4).unwrap();
        assert!(c4.is_isomorphic(&c4));
        // same size, different length
        assert!(!c4.is_isomorphic(&FiniteLattice::cube(2).unwrap()));
        let a = FiniteLattice::cube(1).unwrap().product(&FiniteLattice::chain(3).unwrap());
        let b = FiniteLattice::chain(3).unwrap().product(&FiniteLattice::cube(1).unwrap());
        assert!(a.is_isomorphic(&b));
    }

    #[test]
    fn lattice_of_ideals() {
        use crate::ideals::enumerate_ideals;
        let mut c = crate::lie::empty_constants(3);
        crate::lie::set_bracket(&mut c, 2, 0, &[crate::rat::rat_i(2), crate::rat::rat_i(0), crate::rat::rat_i(0)]);
        crate::lie::set_bracket(&mut c, 2, 1, &[crate::rat::rat_i(0), crate::rat::rat_i(-2), crate::rat::rat_i(0)]);
        crate::lie::set_bracket(&mut c, 0, 1, &[crate::rat::rat_i(0), crate::rat::rat_i(0), crate::rat::rat_i(1)]);
        let sl2 = LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], c).unwrap();

        let ids = enumerate_ideals(&sl2, 16).unwrap();
        let lat = lattice_of(&ids).unwrap();
        assert!(lat.is_isomorphic(&FiniteLattice::chain(2).unwrap()));

        let sum3 = sl2.direct_sum(&sl2).direct_sum(&sl2);
        let ids = enumerate_ideals(&sum3, 32).unwrap();
        let lat = lattice_of(&ids).unwrap();
        assert!(lat.is_isomorphic(&FiniteLattice::cube(3).unwrap()));

        // incomplete enumerations are rejected
        let ab2 = LieAlgebra::abelian(2);
        let ids = enumerate_ideals(&ab2, 64).unwrap();
        assert!(lattice_of(&ids).is_err());
    }

    /// Splitting off a simple ideal multiplies the ideal lattice by a
    /// 2-chain: the direct-product reduction for nonfaithful algebras.
    #[test]
    fn simple_summand_gives_product_lattice() {
        use crate::families::{sl2, FamilySpec, SimpleKind};
        use crate::ideals::enumerate_ideals;
        let faithful = FamilySpec::bi(vec![SimpleKind::Sl(2)], vec![vec![2]]).build().unwrap();
        let faithful_lat =
            lattice_of(&enumerate_ideals(&faithful, 64).unwrap()).unwrap();
        let combined = sl2().direct_sum(&faithful);
        let combined_lat =
            lattice_of(&enumerate_ideals(&combined, 64).unwrap()).unwrap();
        let product = FiniteLattice::chain(2).unwrap().product(&faithful_lat);
        assert!(combined_lat.is_isomorphic(&product));
    }
}
