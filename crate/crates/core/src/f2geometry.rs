//! Combinatorial model of the 2-torsion of a genus-2 Jacobian and of the
//! sixteen theta-characteristics.
//!
//! Everything is expressed in terms of the six Weierstrass points
//! `w1..w6`. A 2-torsion point is an even subset of `{1..6}` taken modulo
//! complement, a theta-characteristic is an odd subset modulo complement.
//! Of the two complementary representatives we always store the one that
//! does not contain index 6, so equality is equality of bitmasks.
//!
//! Bit `i - 1` of a mask stands for the Weierstrass point `w_i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use thiserror::Error;

/// Number of Weierstrass points on a genus-2 curve.
pub const WEIERSTRASS_COUNT: u8 = 6;

const FULL: u8 = 0b11_1111;
const SIXTH: u8 = 1 << 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("Weierstrass index {0} is outside 1..=6")]
    IndexOutOfRange(u8),
    #[error("Weierstrass index {0} listed twice")]
    DuplicateIndex(u8),
    #[error("a {expected} needs a subset of {parity} cardinality, got {len} indices")]
    WrongCardinality {
        expected: &'static str,
        parity: &'static str,
        len: u32,
    },
    #[error("mask {0:#x} does not fit in six bits")]
    MaskOutOfRange(u8),
    #[error("the two theta-characteristics must be distinct")]
    EqualCharacteristics,
    #[error("theta-characteristic {0} is odd; Klein subgroups exist only for even ones")]
    OddCharacteristic(ThetaCharacteristic),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Label of one of the six Weierstrass points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeierstrassIndex(u8);

impl WeierstrassIndex {
    pub fn new(value: u8) -> Result<Self, GeometryError> {
        if (1..=WEIERSTRASS_COUNT).contains(&value) {
            Ok(WeierstrassIndex(value))
        } else {
            Err(GeometryError::IndexOutOfRange(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    fn bit(self) -> u8 {
        1 << (self.0 - 1)
    }
}

fn canonical(mask: u8) -> u8 {
    if mask & SIXTH != 0 {
        mask ^ FULL
    } else {
        mask
    }
}

fn mask_from_indices(indices: &[u8]) -> Result<u8, GeometryError> {
    let mut mask = 0u8;
    for &i in indices {
        let bit = WeierstrassIndex::new(i)?.bit();
        if mask & bit != 0 {
            return Err(GeometryError::DuplicateIndex(i));
        }
        mask |= bit;
    }
    Ok(mask)
}

/// Iterator over the indices (1-based, increasing) present in a mask.
#[derive(Debug, Clone)]
pub struct Indices(u8);

impl Iterator for Indices {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }
}

// Lexicographic order on the sorted index lists: {} < {1} < {1,2} < {1,2,3} < {1,3} < ...
fn lex_cmp(a: u8, b: u8) -> Ordering {
    Indices(a).cmp(Indices(b))
}

fn write_indices(f: &mut fmt::Formatter<'_>, mask: u8) -> fmt::Result {
    for (k, i) in Indices(mask).enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{i}")?;
    }
    Ok(())
}

fn parse_indices(s: &str) -> Result<Vec<u8>, GeometryError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u8>().map_err(|_| GeometryError::Parse {
                input: s.to_string(),
                reason: format!("{:?} is not an index", tok.trim()),
            })
        })
        .collect()
}

/// A point of `J[2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoTorsionPoint(u8);

impl TwoTorsionPoint {
    pub const IDENTITY: TwoTorsionPoint = TwoTorsionPoint(0);

    /// Builds the class of an even subset of `{1..6}`.
    pub fn new(indices: &[u8]) -> Result<Self, GeometryError> {
        Self::from_mask(mask_from_indices(indices)?)
    }

    pub fn from_mask(mask: u8) -> Result<Self, GeometryError> {
        if mask > FULL {
            return Err(GeometryError::MaskOutOfRange(mask));
        }
        if !mask.count_ones().is_multiple_of(2) {
            return Err(GeometryError::WrongCardinality {
                expected: "2-torsion point",
                parity: "even",
                len: mask.count_ones(),
            });
        }
        Ok(TwoTorsionPoint(canonical(mask)))
    }

    /// Canonical representative as a bitmask (bit 5 always clear).
    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    /// Intersection parity of representatives.
    pub fn weil_pairing(self, other: TwoTorsionPoint) -> u8 {
        ((self.0 & other.0).count_ones() % 2) as u8
    }

    /// All 16 points in lexicographic order of their canonical representatives.
    pub fn all() -> Vec<TwoTorsionPoint> {
        let mut out: Vec<_> = (0..SIXTH)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(TwoTorsionPoint)
            .collect();
        out.sort();
        out
    }
}

impl Add for TwoTorsionPoint {
    type Output = TwoTorsionPoint;

    // addition over F2 is symmetric difference
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: TwoTorsionPoint) -> TwoTorsionPoint {
        TwoTorsionPoint(canonical(self.0 ^ rhs.0))
    }
}

impl std::iter::Sum for TwoTorsionPoint {
    fn sum<I: Iterator<Item = TwoTorsionPoint>>(iter: I) -> Self {
        iter.fold(TwoTorsionPoint::IDENTITY, Add::add)
    }
}

impl Ord for TwoTorsionPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.0, other.0)
    }
}

impl PartialOrd for TwoTorsionPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TwoTorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_indices(f, self.0)
    }
}

impl FromStr for TwoTorsionPoint {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TwoTorsionPoint::new(&parse_indices(s)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// 1 for odd, 0 for even.
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// One of the 16 theta-characteristics.
///
/// Odd ones are the classes `{i}` (the divisor `w_i`), even ones are the
/// partitions of the Weierstrass points into two triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaCharacteristic(u8);

impl ThetaCharacteristic {
    /// Builds the class of an odd subset of `{1..6}`.
    pub fn new(indices: &[u8]) -> Result<Self, GeometryError> {
        Self::from_mask(mask_from_indices(indices)?)
    }

    pub fn from_mask(mask: u8) -> Result<Self, GeometryError> {
        if mask > FULL {
            return Err(GeometryError::MaskOutOfRange(mask));
        }
        if mask.count_ones() % 2 != 1 {
            return Err(GeometryError::WrongCardinality {
                expected: "theta-characteristic",
                parity: "odd",
                len: mask.count_ones(),
            });
        }
        Ok(ThetaCharacteristic(canonical(mask)))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    pub fn parity(self) -> Parity {
        let n = self.0.count_ones();
        if n.min(6 - n) == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() == Parity::Odd
    }

    /// The product `κα`.
    pub fn twist(self, a: TwoTorsionPoint) -> ThetaCharacteristic {
        ThetaCharacteristic(canonical(self.0 ^ a.0))
    }

    /// The unique `β` with `self.twist(β) == other`.
    pub fn difference(self, other: ThetaCharacteristic) -> TwoTorsionPoint {
        TwoTorsionPoint(canonical(self.0 ^ other.0))
    }

    /// All 16 characteristics in lexicographic order.
    pub fn all() -> Vec<ThetaCharacteristic> {
        let mut out: Vec<_> = (0..SIXTH)
            .filter(|m| m.count_ones() % 2 == 1)
            .map(ThetaCharacteristic)
            .collect();
        out.sort();
        out
    }
}

impl Ord for ThetaCharacteristic {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self.0, other.0)
    }
}

impl PartialOrd for ThetaCharacteristic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ThetaCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_indices(f, self.0)
    }
}

impl FromStr for ThetaCharacteristic {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ThetaCharacteristic::new(&parse_indices(s)?)
    }
}

/// `S(κ)`: the six 2-torsion points `α` for which `κα` is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSet {
    pub kappa: ThetaCharacteristic,
    /// Sorted, always six entries.
    pub elements: Vec<TwoTorsionPoint>,
}

impl SSet {
    pub fn contains(&self, a: TwoTorsionPoint) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = TwoTorsionPoint> + '_ {
        self.elements.iter().copied()
    }

    /// Group-law sum of all elements.
    pub fn sum(&self) -> TwoTorsionPoint {
        self.iter().sum()
    }
}

pub fn s_set(kappa: ThetaCharacteristic) -> SSet {
    let elements = TwoTorsionPoint::all()
        .into_iter()
        .filter(|&a| kappa.twist(a).is_odd())
        .collect();
    SSet { kappa, elements }
}

/// `J[2] \ S(κ)`, sorted; the ten summands of the symmetric square.
pub fn sym2_complement(kappa: ThetaCharacteristic) -> Vec<TwoTorsionPoint> {
    TwoTorsionPoint::all()
        .into_iter()
        .filter(|&a| !kappa.twist(a).is_odd())
        .collect()
}

/// Sums `a + b` over the 15 unordered pairs of distinct elements of `S(κ)`,
/// in pair order (lexicographic on the pair).
pub fn end0_pair_sums(kappa: ThetaCharacteristic) -> Vec<TwoTorsionPoint> {
    let s = s_set(kappa).elements;
    let mut out = Vec::with_capacity(15);
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            out.push(a + b);
        }
    }
    out
}

/// Values of the quadratic form `q_κ(α) = parity(κ) + parity(κα)` over `J[2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticFormTable {
    pub kappa: ThetaCharacteristic,
    // indexed by canonical mask, which is < 32
    values: [u8; 32],
}

impl QuadraticFormTable {
    pub fn get(&self, a: TwoTorsionPoint) -> u8 {
        self.values[a.0 as usize]
    }

    pub fn zeros(&self) -> usize {
        TwoTorsionPoint::all()
            .into_iter()
            .filter(|&a| self.get(a) == 0)
            .count()
    }

    /// Arf invariant: the value taken by the majority of points.
    pub fn arf(&self) -> u8 {
        if self.zeros() > 8 {
            0
        } else {
            1
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (TwoTorsionPoint, u8)> + '_ {
        TwoTorsionPoint::all().into_iter().map(|a| (a, self.get(a)))
    }
}

pub fn quadratic_form(kappa: ThetaCharacteristic) -> QuadraticFormTable {
    let mut values = [0u8; 32];
    for a in TwoTorsionPoint::all() {
        values[a.0 as usize] = kappa.parity().bit() ^ kappa.twist(a).parity().bit();
    }
    QuadraticFormTable { kappa, values }
}

/// `S(κ) ∩ S(κ')` for `κ ≠ κ'`, returned as a sorted pair `(γ, δ)`.
///
/// The pair always satisfies `κγδ = κ'`.
pub fn pfaffian_intersection(
    kappa: ThetaCharacteristic,
    kappa2: ThetaCharacteristic,
) -> Result<(TwoTorsionPoint, TwoTorsionPoint), GeometryError> {
    if kappa == kappa2 {
        return Err(GeometryError::EqualCharacteristics);
    }
    let other = s_set(kappa2);
    let common: Vec<_> = s_set(kappa).iter().filter(|&a| other.contains(a)).collect();
    match common[..] {
        [gamma, delta] => Ok((gamma, delta)),
        _ => unreachable!(
            "S({kappa}) and S({kappa2}) meet in {} points",
            common.len()
        ),
    }
}

/// For every `κ' ≠ κ` the direction `β = κ⁻¹κ'`.
pub fn phi_direction_map(
    kappa: ThetaCharacteristic,
) -> BTreeMap<ThetaCharacteristic, TwoTorsionPoint> {
    ThetaCharacteristic::all()
        .into_iter()
        .filter(|&k| k != kappa)
        .map(|k| (k, kappa.difference(k)))
        .collect()
}

fn pair_subgroup(triple: u8) -> Vec<TwoTorsionPoint> {
    let idx: Vec<u8> = Indices(triple).collect();
    let mut out = vec![TwoTorsionPoint::IDENTITY];
    for (i, &a) in idx.iter().enumerate() {
        for &b in &idx[i + 1..] {
            out.push(TwoTorsionPoint(canonical((1 << (a - 1)) | (1 << (b - 1)))));
        }
    }
    out.sort();
    out
}

/// For an even `κ = {T, Tᶜ}` the two Klein four-groups generated by the
/// pairs inside `T` and inside `Tᶜ`. `T` is the canonical representative
/// (the triple avoiding index 6); both groups are returned sorted.
pub fn klein_subgroups(
    kappa: ThetaCharacteristic,
) -> Result<(Vec<TwoTorsionPoint>, Vec<TwoTorsionPoint>), GeometryError> {
    if kappa.is_odd() {
        return Err(GeometryError::OddCharacteristic(kappa));
    }
    Ok((pair_subgroup(kappa.0), pair_subgroup(kappa.0 ^ FULL)))
}

/// Every 2-torsion point and every theta-characteristic, each sorted.
pub fn enumerate_all() -> (Vec<TwoTorsionPoint>, Vec<ThetaCharacteristic>) {
    (TwoTorsionPoint::all(), ThetaCharacteristic::all())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ix: &[u8]) -> TwoTorsionPoint {
        TwoTorsionPoint::new(ix).unwrap()
    }

    fn k(ix: &[u8]) -> ThetaCharacteristic {
        ThetaCharacteristic::new(ix).unwrap()
    }

    #[test]
    fn make_two_torsion_canonicalizes() {
        assert!(p(&[]).is_identity());
        assert_eq!(p(&[1, 2]).mask(), 0b11);
        assert_eq!(p(&[3, 4, 5, 6]), p(&[1, 2]));
        assert_eq!(p(&[1, 6]).to_string(), "2,3,4,5");
    }

    #[test]
    fn make_two_torsion_rejects_bad_input() {
        assert!(matches!(
            TwoTorsionPoint::new(&[1, 2, 3]),
            Err(GeometryError::WrongCardinality { .. })
        ));
        assert_eq!(
            TwoTorsionPoint::new(&[1, 7]),
            Err(GeometryError::IndexOutOfRange(7))
        );
        assert_eq!(
            TwoTorsionPoint::new(&[0, 1]),
            Err(GeometryError::IndexOutOfRange(0))
        );
        assert_eq!(
            TwoTorsionPoint::new(&[2, 2]),
            Err(GeometryError::DuplicateIndex(2))
        );
        assert_eq!(
            TwoTorsionPoint::from_mask(0x40),
            Err(GeometryError::MaskOutOfRange(0x40))
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 2]) + p(&[1, 2]), TwoTorsionPoint::IDENTITY);
        assert_eq!(p(&[1, 2]) + p(&[2, 3]), p(&[1, 3]));
        assert_eq!((p(&[1, 2]) + p(&[2, 6])).to_string(), "2,3,4,5");
    }

    #[test]
    fn weil_pairing_examples() {
        for a in TwoTorsionPoint::all() {
            assert_eq!(a.weil_pairing(a), 0);
        }
        assert_eq!(p(&[1, 2]).weil_pairing(p(&[2, 3])), 1);
        assert_eq!(p(&[1, 2]).weil_pairing(p(&[3, 4])), 0);
        // independent of the representative
        assert_eq!(p(&[1, 2]).weil_pairing(p(&[1, 3, 4, 6])), 1);
    }

    #[test]
    fn make_theta_char_examples() {
        assert_eq!(k(&[1]).parity(), Parity::Odd);
        assert_eq!(k(&[1, 2, 3]).parity(), Parity::Even);
        assert_eq!(k(&[2, 3, 4, 5, 6]), k(&[1]));
        assert_eq!(k(&[6]).to_string(), "1,2,3,4,5");
        assert!(k(&[6]).is_odd());
        assert!(matches!(
            ThetaCharacteristic::new(&[1, 2]),
            Err(GeometryError::WrongCardinality { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        for kappa in ThetaCharacteristic::all() {
            assert_eq!(kappa.twist(TwoTorsionPoint::IDENTITY), kappa);
        }
        assert_eq!(k(&[1]).twist(p(&[1, 2])), k(&[2]));
        let t = k(&[1, 2, 3]).twist(p(&[1, 4]));
        assert_eq!(t, k(&[2, 3, 4]));
        assert_eq!(t.parity(), Parity::Even);
    }

    #[test]
    fn s_set_examples() {
        let s1: Vec<String> = s_set(k(&[1])).iter().map(|a| a.to_string()).collect();
        assert_eq!(s1, ["", "1,2", "1,3", "1,4", "1,5", "2,3,4,5"]);
        let s123: Vec<String> = s_set(k(&[1, 2, 3])).iter().map(|a| a.to_string()).collect();
        assert_eq!(s123, ["1,2", "1,2,3,4", "1,2,3,5", "1,3", "2,3", "4,5"]);
        for kappa in ThetaCharacteristic::all().into_iter().filter(|k| k.is_odd()) {
            assert!(s_set(kappa).contains(TwoTorsionPoint::IDENTITY));
        }
    }

    #[test]
    fn sym2_complement_examples() {
        let s = s_set(k(&[1]));
        let c = sym2_complement(k(&[1]));
        assert_eq!(c.len(), 10);
        assert!(c.iter().all(|&a| !s.contains(a)));
        for kappa in ThetaCharacteristic::all() {
            let c = sym2_complement(kappa);
            assert_eq!(c.len(), 10);
            assert_eq!(c.contains(&TwoTorsionPoint::IDENTITY), !kappa.is_odd());
        }
    }

    #[test]
    fn end0_examples() {
        let sums = end0_pair_sums(k(&[1]));
        assert_eq!(sums.len(), 15);
        assert_eq!(sums.iter().filter(|&&a| a == p(&[2, 3])).count(), 1);
        let mut sorted = sums.clone();
        sorted.sort();
        let nonzero: Vec<_> = TwoTorsionPoint::all()
            .into_iter()
            .filter(|a| !a.is_identity())
            .collect();
        assert_eq!(sorted, nonzero);
    }

    #[test]
    fn quadratic_form_examples() {
        assert_eq!(quadratic_form(k(&[1])).get(TwoTorsionPoint::IDENTITY), 0);
        assert_eq!(quadratic_form(k(&[1])).get(p(&[1, 2])), 0);
        assert_eq!(quadratic_form(k(&[1, 2, 3])).get(p(&[1, 2])), 1);
        assert_eq!(quadratic_form(k(&[1])).zeros(), 6);
        assert_eq!(quadratic_form(k(&[1, 2, 3])).zeros(), 10);
    }

    #[test]
    fn pfaffian_intersection_examples() {
        assert_eq!(
            pfaffian_intersection(k(&[1]), k(&[2])).unwrap(),
            (TwoTorsionPoint::IDENTITY, p(&[1, 2]))
        );
        let (g, d) = pfaffian_intersection(k(&[1]), k(&[1, 2, 3])).unwrap();
        assert_eq!((g, d), (p(&[1, 2]), p(&[1, 3])));
        assert_eq!(k(&[1]).twist(g).twist(d), k(&[1, 2, 3]));
        assert_eq!(
            pfaffian_intersection(k(&[1, 2, 3]), k(&[1])).unwrap(),
            (g, d)
        );
        assert_eq!(
            pfaffian_intersection(k(&[1]), k(&[1])),
            Err(GeometryError::EqualCharacteristics)
        );
    }

    #[test]
    fn phi_direction_examples() {
        let m = phi_direction_map(k(&[1]));
        assert_eq!(m.len(), 15);
        assert!(!m.contains_key(&k(&[1])));
        assert_eq!(m[&k(&[2])], p(&[1, 2]));
    }

    #[test]
    fn klein_examples() {
        let (h, hc) = klein_subgroups(k(&[1, 2, 3])).unwrap();
        assert_eq!(h, vec![p(&[]), p(&[1, 2]), p(&[1, 3]), p(&[2, 3])]);
        let mut expected = vec![p(&[]), p(&[4, 5]), p(&[4, 6]), p(&[5, 6])];
        expected.sort();
        assert_eq!(hc, expected);
        assert_eq!(hc[1].to_string(), "1,2,3,4");
        assert!(h.contains(&(p(&[1, 2]) + p(&[1, 3]))));
        assert!(matches!(
            klein_subgroups(k(&[1])),
            Err(GeometryError::OddCharacteristic(_))
        ));
    }

    #[test]
    fn enumeration_order_and_counts() {
        let (points, chars) = enumerate_all();
        assert_eq!(points.len(), 16);
        assert_eq!(chars.len(), 16);
        assert_eq!(chars.iter().filter(|k| k.is_odd()).count(), 6);
        assert!(points.windows(2).all(|w| w[0] < w[1]));
        assert!(chars.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(points[0], TwoTorsionPoint::IDENTITY);
        assert_eq!(chars[0], k(&[1]));
        assert_eq!(chars[1], k(&[1, 2, 3]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("1,2,3".parse::<ThetaCharacteristic>().unwrap(), k(&[1, 2, 3]));
        assert_eq!(" 2 , 1 ".parse::<TwoTorsionPoint>().unwrap(), p(&[1, 2]));
        assert_eq!("".parse::<TwoTorsionPoint>().unwrap(), TwoTorsionPoint::IDENTITY);
        assert!(matches!(
            "1,x".parse::<ThetaCharacteristic>(),
            Err(GeometryError::Parse { .. })
        ));
        assert!("1,2".parse::<ThetaCharacteristic>().is_err());
    }
}
