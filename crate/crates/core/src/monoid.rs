//! Strictly totally ordered commutative monoids that carry word weights.
//!
//! Three carriers are supported: natural numbers under addition, positive
//! integers under multiplication, and pairs of natural numbers under
//! componentwise addition ordered lexicographically. All integers are
//! arbitrary precision. In every carrier the identity is the global minimum
//! and the order is translation invariant, so combining with any
//! non-identity value strictly increases.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidKind {
    /// `(N0, +, 0, <)`
    NatSum,
    /// `(N, *, 1, <)`
    NatProduct,
    /// `(N0 x N0, +, (0,0), lexicographic <)`
    Vec2LexSum,
}

impl MonoidKind {
    pub const ALL: [MonoidKind; 3] = [
        MonoidKind::NatSum,
        MonoidKind::NatProduct,
        MonoidKind::Vec2LexSum,
    ];

    pub fn identity(self) -> MonoidValue {
        match self {
            MonoidKind::NatSum => MonoidValue(Repr::Sum(BigUint::zero())),
            MonoidKind::NatProduct => MonoidValue(Repr::Product(BigUint::one())),
            MonoidKind::Vec2LexSum => MonoidValue(Repr::Vec2(BigUint::zero(), BigUint::zero())),
        }
    }

    /// Name used in measure files.
    pub fn name(self) -> &'static str {
        match self {
            MonoidKind::NatSum => "nat-sum",
            MonoidKind::NatProduct => "nat-product",
            MonoidKind::Vec2LexSum => "vec2-lex",
        }
    }

    /// Parses a value in the textual syntax of this kind: a decimal integer,
    /// or `(a,b)` for pairs.
    pub fn parse_value(self, input: &str) -> Result<MonoidValue> {
        let invalid = || Error::InvalidValue {
            kind: self,
            input: input.to_string(),
        };
        let nat = |s: &str| -> Result<BigUint> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            BigUint::from_str(s).map_err(|_| invalid())
        };
        match self {
            MonoidKind::NatSum => Ok(MonoidValue::nat_sum(nat(input)?)),
            MonoidKind::NatProduct => MonoidValue::nat_product(nat(input)?),
            MonoidKind::Vec2LexSum => {
                let inner = input
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(invalid)?;
                let (a, b) = inner.split_once(',').ok_or_else(invalid)?;
                Ok(MonoidValue::vec2(nat(a)?, nat(b)?))
            }
        }
    }
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonoidKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown monoid `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Sum(BigUint),
    Product(BigUint),
    Vec2(BigUint, BigUint),
}

/// An element of one of the supported monoids. Values of different kinds
/// are never combined or compared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidValue(Repr);

impl MonoidValue {
    pub fn nat_sum(n: impl Into<BigUint>) -> Self {
        MonoidValue(Repr::Sum(n.into()))
    }

    pub fn nat_product(n: impl Into<BigUint>) -> Result<Self> {
        let n = n.into();
        if n.is_zero() {
            return Err(Error::NotInCarrier {
                kind: MonoidKind::NatProduct,
                value: n.to_string(),
            });
        }
        Ok(MonoidValue(Repr::Product(n)))
    }

    pub fn vec2(a: impl Into<BigUint>, b: impl Into<BigUint>) -> Self {
        MonoidValue(Repr::Vec2(a.into(), b.into()))
    }

    pub fn kind(&self) -> MonoidKind {
        match self.0 {
            Repr::Sum(_) => MonoidKind::NatSum,
            Repr::Product(_) => MonoidKind::NatProduct,
            Repr::Vec2(..) => MonoidKind::Vec2LexSum,
        }
    }

    /// Integer payload of a natural value; `None` for pairs.
    pub fn as_nat(&self) -> Option<&BigUint> {
        match &self.0 {
            Repr::Sum(n) | Repr::Product(n) => Some(n),
            Repr::Vec2(..) => None,
        }
    }

    /// Components of a pair value; `None` for naturals.
    pub fn as_pair(&self) -> Option<(&BigUint, &BigUint)> {
        match &self.0 {
            Repr::Vec2(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.0 {
            Repr::Sum(n) => n.is_zero(),
            Repr::Product(n) => n.is_one(),
            Repr::Vec2(a, b) => a.is_zero() && b.is_zero(),
        }
    }

    fn same_kind(&self, other: &Self) -> Result<()> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                left: self.kind(),
                right: other.kind(),
            })
        }
    }

    pub fn combine(&self, other: &Self) -> Result<Self> {
        self.same_kind(other)?;
        Ok(self.op(other))
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        self.same_kind(other)?;
        Ok(self.cmp_same(other))
    }

    /// The step `s` with `self ∘ s = target`, if the carrier contains one.
    pub fn residual(&self, target: &Self) -> Result<Option<Self>> {
        self.same_kind(target)?;
        Ok(match (&self.0, &target.0) {
            (Repr::Sum(x), Repr::Sum(t)) => (t >= x).then(|| MonoidValue::nat_sum(t - x)),
            (Repr::Product(x), Repr::Product(t)) => {
                let (q, r) = t.div_rem(x);
                r.is_zero().then_some(MonoidValue(Repr::Product(q)))
            }
            (Repr::Vec2(xa, xb), Repr::Vec2(ta, tb)) => {
                (ta >= xa && tb >= xb).then(|| MonoidValue::vec2(ta - xa, tb - xb))
            }
            _ => unreachable!("kinds checked"),
        })
    }

    /// Combine for values already known to share a kind, e.g. values drawn
    /// from one measure.
    pub(crate) fn op(&self, other: &Self) -> Self {
        MonoidValue(match (&self.0, &other.0) {
            (Repr::Sum(x), Repr::Sum(y)) => Repr::Sum(x + y),
            (Repr::Product(x), Repr::Product(y)) => Repr::Product(x * y),
            (Repr::Vec2(xa, xb), Repr::Vec2(ya, yb)) => Repr::Vec2(xa + ya, xb + yb),
            _ => panic!("combine across monoid kinds"),
        })
    }

    pub(crate) fn op_assign(&mut self, other: &Self) {
        match (&mut self.0, &other.0) {
            (Repr::Sum(x), Repr::Sum(y)) => *x += y,
            (Repr::Product(x), Repr::Product(y)) => *x *= y,
            (Repr::Vec2(xa, xb), Repr::Vec2(ya, yb)) => {
                *xa += ya;
                *xb += yb;
            }
            _ => panic!("combine across monoid kinds"),
        }
    }

    pub(crate) fn cmp_same(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Sum(x), Repr::Sum(y)) | (Repr::Product(x), Repr::Product(y)) => x.cmp(y),
            (Repr::Vec2(xa, xb), Repr::Vec2(ya, yb)) => xa.cmp(ya).then_with(|| xb.cmp(yb)),
            _ => panic!("compare across monoid kinds"),
        }
    }

    pub(crate) fn lt(&self, other: &Self) -> bool {
        self.cmp_same(other) == Ordering::Less
    }

    pub(crate) fn le(&self, other: &Self) -> bool {
        self.cmp_same(other) != Ordering::Greater
    }
}

impl fmt::Display for MonoidValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Sum(n) | Repr::Product(n) => write!(f, "{n}"),
            Repr::Vec2(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Folds values of one kind, starting from the identity.
pub(crate) fn fold<'a>(kind: MonoidKind, values: impl IntoIterator<Item = &'a MonoidValue>) -> MonoidValue {
    let mut acc = kind.identity();
    for v in values {
        acc.op_assign(v);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sum(n: u64) -> MonoidValue {
        MonoidValue::nat_sum(n)
    }

    fn prod(n: u64) -> MonoidValue {
        MonoidValue::nat_product(n).unwrap()
    }

    fn v2(a: u64, b: u64) -> MonoidValue {
        MonoidValue::vec2(a, b)
    }

    #[test]
    fn identities() {
        assert_eq!(MonoidKind::NatSum.identity(), sum(0));
        assert_eq!(MonoidKind::NatProduct.identity(), prod(1));
        assert_eq!(MonoidKind::Vec2LexSum.identity(), v2(0, 0));
        for kind in MonoidKind::ALL {
            assert!(kind.identity().is_identity());
        }
    }

    #[test]
    fn combine_examples() {
        assert_eq!(sum(2).combine(&sum(3)).unwrap(), sum(5));
        assert_eq!(v2(0, 2).combine(&v2(1, 1)).unwrap(), v2(1, 3));
        assert_eq!(prod(2).combine(&prod(6)).unwrap(), prod(12));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(v2(0, 2).compare(&v2(1, 1)).unwrap(), Ordering::Less);
        assert_eq!(sum(7).compare(&sum(7)).unwrap(), Ordering::Equal);
        assert_eq!(v2(2, 0).compare(&v2(1, 99)).unwrap(), Ordering::Greater);
        // (0,0) < (0,2) < (1,1) < (2,0)
        let chain = [v2(0, 0), v2(0, 2), v2(1, 1), v2(2, 0)];
        for pair in chain.windows(2) {
            assert_eq!(pair[0].compare(&pair[1]).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let err = sum(1).combine(&prod(2)).unwrap_err();
        assert!(matches!(err, Error::KindMismatch { .. }));
        assert!(v2(1, 0).compare(&sum(1)).is_err());
        assert!(sum(1).residual(&v2(1, 1)).is_err());
    }

    #[test]
    fn product_rejects_zero() {
        assert!(MonoidValue::nat_product(0u32).is_err());
        assert!(MonoidKind::NatProduct.parse_value("0").is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(MonoidKind::Vec2LexSum.parse_value("(3,14)").unwrap(), v2(3, 14));
        assert_eq!(v2(3, 14).to_string(), "(3,14)");
        assert_eq!(MonoidKind::NatSum.parse_value("42").unwrap(), sum(42));
        for bad in ["( 1,2)", "(1, 2)", "1,2", "(1,2", "-3", "", "+4"] {
            assert!(MonoidKind::Vec2LexSum.parse_value(bad).is_err(), "{bad}");
        }
        assert!(MonoidKind::NatSum.parse_value("-1").is_err());
        assert_eq!("vec2-lex".parse::<MonoidKind>().unwrap(), MonoidKind::Vec2LexSum);
        assert!("nat".parse::<MonoidKind>().is_err());
    }

    #[test]
    fn big_products_do_not_overflow() {
        let big = (0..100).fold(prod(1), |acc, _| acc.op(&prod(1 << 20)));
        assert_eq!(big.as_nat().unwrap().bits(), 2001);
    }

    #[test]
    fn residuals() {
        assert_eq!(sum(2).residual(&sum(6)).unwrap(), Some(sum(4)));
        assert_eq!(sum(6).residual(&sum(2)).unwrap(), None);
        assert_eq!(prod(2).residual(&prod(6)).unwrap(), Some(prod(3)));
        assert_eq!(prod(4).residual(&prod(6)).unwrap(), None);
        assert_eq!(v2(0, 2).residual(&v2(1, 1)).unwrap(), None);
        assert_eq!(v2(1, 1).residual(&v2(2, 3)).unwrap(), Some(v2(1, 2)));
    }

    fn arb_value(kind: MonoidKind) -> BoxedStrategy<MonoidValue> {
        match kind {
            MonoidKind::NatSum => (0u64..1_000).prop_map(sum).boxed(),
            MonoidKind::NatProduct => (1u64..1_000).prop_map(prod).boxed(),
            MonoidKind::Vec2LexSum => (0u64..50, 0u64..50).prop_map(|(a, b)| v2(a, b)).boxed(),
        }
    }

    fn arb_triple() -> impl Strategy<Value = (MonoidValue, MonoidValue, MonoidValue)> {
        prop_oneof![
            Just(MonoidKind::NatSum),
            Just(MonoidKind::NatProduct),
            Just(MonoidKind::Vec2LexSum)
        ]
        .prop_flat_map(|k| (arb_value(k), arb_value(k), arb_value(k)))
    }

    proptest! {
        #[test]
        fn associativity((x, y, z) in arb_triple()) {
            let l = x.combine(&y).unwrap().combine(&z).unwrap();
            let r = x.combine(&y.combine(&z).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn commutativity((x, y, _z) in arb_triple()) {
            prop_assert_eq!(x.combine(&y).unwrap(), y.combine(&x).unwrap());
        }

        #[test]
        fn left_identity((x, _y, _z) in arb_triple()) {
            prop_assert_eq!(x.kind().identity().combine(&x).unwrap(), x);
        }

        #[test]
        fn totality((x, y, _z) in arb_triple()) {
            let xy = x.compare(&y).unwrap();
            let yx = y.compare(&x).unwrap();
            prop_assert_eq!(xy, yx.reverse());
            prop_assert_eq!(xy == Ordering::Equal, x == y);
        }

        #[test]
        fn strictly_increasing((x, y, _z) in arb_triple()) {
            prop_assume!(!y.is_identity());
            prop_assert_eq!(x.combine(&y).unwrap().compare(&x).unwrap(), Ordering::Greater);
        }

        #[test]
        fn translation_invariant((x, y, z) in arb_triple()) {
            let before = x.compare(&y).unwrap();
            let after = x.combine(&z).unwrap().compare(&y.combine(&z).unwrap()).unwrap();
            prop_assert_eq!(before, after);
        }

        #[test]
        fn identity_is_minimum((x, _y, _z) in arb_triple()) {
            prop_assert_ne!(x.kind().identity().compare(&x).unwrap(), Ordering::Greater);
        }

        #[test]
        fn residual_inverts_combine((x, y, _z) in arb_triple()) {
            let target = x.combine(&y).unwrap();
            prop_assert_eq!(x.residual(&target).unwrap(), Some(y));
        }

        #[test]
        fn display_parses_back((x, _y, _z) in arb_triple()) {
            prop_assert_eq!(x.kind().parse_value(&x.to_string()).unwrap(), x);
        }
    }
}
