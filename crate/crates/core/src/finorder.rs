//! Finite carriers, binary relations as boolean matrices, posets, and
//! join-semilattices.
//!
//! Elements are index-addressed throughout; names are presentation only.
//! Orders may be entered as arbitrary pair sets (e.g. cover pairs) and closed
//! with [`refl_trans_close`] before validation.

use std::fmt;

use thiserror::Error;

/// A named finite carrier set. Names are distinct, non-empty and contain no
/// whitespace so they survive the line-oriented file format.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Carrier {
    names: Vec<String>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CarrierError {
    #[error("carrier must have at least one element")]
    Empty,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}` (empty or contains whitespace)")]
    InvalidName(String),
}

impl Carrier {
    pub fn new<I, S>(names: I) -> Result<Self, CarrierError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(CarrierError::Empty);
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(CarrierError::InvalidName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(CarrierError::DuplicateName(n.clone()));
            }
        }
        Ok(Carrier { names })
    }

    /// Carrier with names `0`, `1`, ..., `n-1`.
    pub fn numbered(n: usize) -> Self {
        Carrier::new((0..n).map(|i| i.to_string())).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A binary relation on `{0, .., n-1}` stored as a row-major boolean matrix;
/// `get(a, b)` means "a related to b".
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Relation::empty(n);
        for a in 0..n {
            r.set(a, a, true);
        }
        r
    }

    pub fn universal(n: usize) -> Self {
        Relation { n, bits: vec![true; n * n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Relation::empty(n);
        for &(a, b) in pairs {
            r.set(a, b, true);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        self.bits[a * self.n + b] = value;
    }

    /// True if every pair of `self` is also in `other`.
    pub fn subset_of(&self, other: &Relation) -> bool {
        assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn union(&self, other: &Relation) -> Relation {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect();
        Relation { n: self.n, bits }
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        assert_eq!(self.n, other.n);
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect();
        Relation { n: self.n, bits }
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| self.get(a, b))
    }

    /// Relabel through a permutation: pair `(a, b)` maps to `(perm[a], perm[b])`.
    pub fn permuted(&self, perm: &[usize]) -> Relation {
        let mut out = Relation::empty(self.n);
        for (a, b) in self.pairs() {
            out.set(perm[a], perm[b], true);
        }
        out
    }
}

/// Least reflexive transitive relation containing `rel` (Warshall closure).
pub fn refl_trans_close(rel: &Relation) -> Relation {
    let n = rel.len();
    let mut out = rel.clone();
    for a in 0..n {
        out.set(a, a, true);
    }
    for k in 0..n {
        for i in 0..n {
            if out.get(i, k) {
                for j in 0..n {
                    if out.get(k, j) {
                        out.set(i, j, true);
                    }
                }
            }
        }
    }
    out
}

/// Witness for a failed partial-order law, least in lexicographic index order.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    #[error("not reflexive at {a}")]
    NotReflexive { a: usize },
    #[error("not antisymmetric at ({a}, {b})")]
    NotAntisymmetric { a: usize, b: usize },
    #[error("not transitive at ({a}, {b}, {c})")]
    NotTransitive { a: usize, b: usize, c: usize },
}

/// A finite partial order. Only constructible through [`validate_poset`], so a
/// `Poset` value is always reflexive, antisymmetric and transitive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poset {
    carrier: Carrier,
    leq: Relation,
}

/// Checks the partial-order laws by matrix scan. The relation must already be
/// reflexive-transitively closed; raw pair input goes through
/// [`refl_trans_close`] first.
pub fn validate_poset(carrier: Carrier, rel: Relation) -> Result<Poset, OrderViolation> {
    let n = carrier.len();
    assert_eq!(rel.len(), n, "relation dimension must match carrier size");
    for a in 0..n {
        if !rel.get(a, a) {
            return Err(OrderViolation::NotReflexive { a });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && rel.get(a, b) && rel.get(b, a) {
                return Err(OrderViolation::NotAntisymmetric { a, b });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !rel.get(a, b) {
                continue;
            }
            for c in 0..n {
                if rel.get(b, c) && !rel.get(a, c) {
                    return Err(OrderViolation::NotTransitive { a, b, c });
                }
            }
        }
    }
    Ok(Poset { carrier, leq: rel })
}

impl Poset {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn leq（&self) -> &Relation {
        &self.leq
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    /// Cover pairs `(a, b)`: a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.le(a, b) {
                    continue;
                }
                let between = (0..n)
                    .any(|c| c != a && c != b && self.le(a, c) && self.le(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Greatest lower bound of `a` and `b`, when it exists.
    pub fn meet_of(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&x| self.le(x, a) && self.le(x, b)).collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&x| self.le(x, m)))
    }

    /// Minimum element, when it exists.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&z| (0..self.len()).all(|a| self.le(z, a)))
    }
}

/// Why a pair has no join in a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JoinFailure {
    /// The pair has no common upper bound at all.
    NoUpperBound,
    /// Two incomparable minimal upper bounds, so no least one.
    IncomparableMinimalUpperBounds(usize, usize),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("no least upper bound for ({a}, {b})")]
pub struct MissingJoin {
    pub a: usize,
    pub b: usize,
    pub failure: JoinFailure,
}

/// A finite join-semilattice presented by its join table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinSemilattice {
    carrier: Carrier,
    join: Vec<usize>,
}

/// Witness for a failed semilattice law.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SemilatticeViolation {
    #[error("join entry at ({a}, {b}) out of range")]
    EntryOutOfRange { a: usize, b: usize },
    #[error("join not idempotent at {a}")]
    NotIdempotent { a: usize },
    #[error("join not commutative at ({a}, {b})")]
    NotCommutative { a: usize, b: usize },
    #[error("join not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

impl JoinSemilattice {
    /// Validates commutativity, idempotence and associativity by table scan.
    pub fn new(carrier: Carrier, join: Vec<usize>) -> Result<Self, SemilatticeViolation> {
        let n = carrier.len();
        assert_eq!(join.len(), n * n, "join table dimension must match carrier size");
        for a in 0..n {
            for b in 0..n {
                if join[a * n + b] >= n {
                    return Err(SemilatticeViolation::EntryOutOfRange { a, b });
                }
            }
        }
        for a in 0..n {
            if join[a * n + a] != a {
                return Err(SemilatticeViolation::NotIdempotent { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if join[a * n + b] != join[b * n + a] {
                    return Err(SemilatticeViolation::NotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab_c = join[join[a * n + b] * n + c];
                    let a_bc = join[a * n + join[b * n + c]];
                    if ab_c != a_bc {
                        return Err(SemilatticeViolation::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(JoinSemilattice { carrier, join })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.carrier.len() + b]
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    /// Induced order: `a <= b` iff `a \/ b = b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&z| (0..self.len()).all(|a| self.le(z, a)))
    }

    pub fn meet_of(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.len();
        let lower: Vec<usize> = (0..n).filter(|&x| self.le(x, a) && self.le(x, b)).collect();
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&x| self.le(x, m)))
    }
}

/// Computes the join table of a poset where every pair has a least upper
/// bound; otherwise reports the first failing pair with a reason.
pub fn joins_from_order(p: &Poset) -> Result<JoinSemilattice, MissingJoin> {
    let n = p.len();
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let ubs: Vec<usize> = (0..n).filter(|&u| p.le(a, u) && p.le(b, u)).collect();
            if ubs.is_empty() {
                return Err(MissingJoin { a, b, failure: JoinFailure::NoUpperBound });
            }
            match ubs.iter().copied().find(|&u| ubs.iter().all(|&v| p.le(u, v))) {
                Some(least) => table[a * n + b] = least,
                None => {
                    let minimal: Vec<usize> = ubs
                        .iter()
                        .copied()
                        .filter(|&u| !ubs.iter().any(|&v| v != u && p.le(v, u)))
                        .collect();
                    return Err(MissingJoin {
                        a,
                        b,
                        failure: JoinFailure::IncomparableMinimalUpperBounds(
                            minimal[0], minimal[1],
                        ),
                    });
                }
            }
        }
    }
    Ok(JoinSemilattice { carrier: p.carrier.clone(), join: table })
}

/// Order presentation of a join-semilattice: `a <= b` iff `a \/ b = b`. Always
/// a valid poset and round-trips with [`joins_from_order`].
pub fn order_from_join(j: &JoinSemilattice) -> Poset {
    let n = j.len();
    let mut rel = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if j.le(a, b) {
                rel.set(a, b, true);
            }
        }
    }
    validate_poset(j.carrier.clone(), rel)
        .expect("order induced by a valid join table is a partial order")
}

/// Common view of the two base presentations: an order, and a join operation
/// when the base is a semilattice.
pub trait OrderBase {
    fn size(&self) -> usize;
    fn carrier(&self) -> &Carrier;
    fn leq(&self, a: usize, b: usize) -> bool;
    /// The join operation of the presentation, `None` for bare posets.
    fn join_of(&self, a: usize, b: usize) -> Option<usize>;
}

impl OrderBase for Poset {
    fn size(&self) -> usize {
        self.len()
    }
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.le(a, b)
    }
    fn join_of(&self, _a: usize, _b: usize) -> Option<usize> {
        None
    }
}

impl OrderBase for JoinSemilattice {
    fn size(&self) -> usize {
        self.len()
    }
    fn carrier(&self) -> &Carrier {
        &self.carrier
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.le(a, b)
    }
    fn join_of(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.join(a, b))
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .iter()
            .map(|&(a, b)| format!("{} < {}", self.carrier.name(a), self.carrier.name(b)))
            .collect();
        write!(f, "poset [{}] {}", self.carrier.names().join(" "), covers.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        let mut rel = Relation::empty(n);
        for a in 0..n {
            for b in a..n {
                rel.set(a, b, true);
            }
        }
        validate_poset(Carrier::numbered(n), rel).unwrap()
    }

    #[test]
    fn closure_of_empty_relation_is_identity() {
        let r = refl_trans_close(&Relation::empty(3));
        assert_eq!(r, Relation::identity(3));
    }

    #[test]
    fn closure_of_cover_chain_is_full_chain_order() {
        let covers = Relation::from_pairs(3, &[(0, 1), (1, 2)]);
        let closed = refl_trans_close(&covers);
        // independent oracle: iterate pair-composition to a fixpoint
        let mut oracle = covers.union(&Relation::identity(3));
        loop {
            let mut next = oracle.clone();
            for (a, b) in oracle.pairs() {
                for c in 0..3 {
                    if oracle.get(b, c) {
                        next.set(a, c, true);
                    }
                }
            }
            if next == oracle {
                break;
            }
            oracle = next;
        }
        assert_eq!(closed, oracle);
        assert_eq!(closed, chain(3).leq().clone());
    }

    #[test]
    fn closure_is_idempotent_on_closed_input() {
        let closed = refl_trans_close(&Relation::from_pairs(4, &[(0, 1), (1, 3), (2, 2)]));
        assert_eq!(refl_trans_close(&closed), closed);
    }

    #[test]
    fn two_cycle_is_not_antisymmetric() {
        let rel = refl_trans_close(&Relation::from_pairs(3, &[(0, 1), (1, 0)]));
        let err = validate_poset(Carrier::numbered(3), rel).unwrap_err();
        assert_eq!(err, OrderViolation::NotAntisymmetric { a: 0, b: 1 });
    }

    #[test]
    fn singleton_identity_is_a_poset() {
        assert!(validate_poset(Carrier::numbered(1), Relation::identity(1)).is_ok());
    }

    #[test]
    fn unclosed_relation_reports_transitivity_witness() {
        let mut rel = Relation::identity(3);
        rel.set(0, 1, true);
        rel.set(1, 2, true);
        let err = validate_poset(Carrier::numbered(3), rel).unwrap_err();
        assert_eq!(err, OrderViolation::NotTransitive { a: 0, b: 1, c: 2 });
    }

    #[test]
    fn antichain_pair_has_no_join() {
        let p = validate_poset(Carrier::numbered(2), Relation::identity(2)).unwrap();
        let err = joins_from_order(&p).unwrap_err();
        assert_eq!(err.failure, JoinFailure::NoUpperBound);
        assert_eq!((err.a, err.b), (0, 1));
    }

    #[test]
    fn linear_order_joins_are_max() {
        let j = joins_from_order(&chain(4)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(j.join(a, b), a.max(b));
            }
        }
        assert_eq!(order_from_join(&j), chain(4));
    }

    #[test]
    fn diamond_with_two_tops_reports_incomparable_bounds() {
        // 0 < a, b < each of two incomparable tops
        let rel = refl_trans_close(&Relation::from_pairs(
            4,
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        ));
        let p = validate_poset(Carrier::numbered(4), rel).unwrap();
        assert!(joins_from_order(&p).is_ok());

        let rel2 = refl_trans_close(&Relation::from_pairs(
            4,
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        ));
        let p2 = validate_poset(Carrier::numbered(4), rel2).unwrap();
        let err = joins_from_order(&p2).unwrap_err();
        assert_eq!((err.a, err.b), (0, 1));
        assert_eq!(err.failure, JoinFailure::IncomparableMinimalUpperBounds(2, 3));
    }

    #[test]
    fn one_element_semilattice_round_trips() {
        let j = JoinSemilattice::new(Carrier::numbered(1), vec![0]).unwrap();
        let p = order_from_join(&j);
        assert_eq!(p.len(), 1);
        assert_eq!(joins_from_order(&p).unwrap(), j);
    }

    #[test]
    fn join_table_laws_are_checked() {
        let c = Carrier::numbered(2);
        assert_eq!(
            JoinSemilattice::new(c.clone(), vec![0, 1, 0, 1]).unwrap_err(),
            SemilatticeViolation::NotCommutative { a: 0, b: 1 }
        );
        assert_eq!(
            JoinSemilattice::new(c.clone(), vec![1, 1, 1, 1]).unwrap_err(),
            SemilatticeViolation::NotIdempotent { a: 0 }
        );
        assert!(JoinSemilattice::new(c, vec![0, 1, 1, 1]).is_ok());
    }

    #[test]
    fn carrier_rejects_bad_names() {
        assert!(Carrier::new(["a", "a"]).is_err());
        assert!(Carrier::new(["a b"]).is_err());
        assert!(Carrier::new(Vec::<String>::new()).is_err());
        assert!(Carrier::new(["x", "y"]).is_ok());
    }
}
