use std::fmt::{self, Debug, Display};
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use num_traits::Zero;

/// Exact scalar for charges. Implementations must never round.
pub trait ExactScalar:
    Zero + Clone + Ord + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> + Debug + Display
{
    fn ratio(num: i64, den: i64) -> Self;

    fn integer(k: i64) -> Self {
        Self::ratio(k, 1)
    }

    /// The value times 45, if that is an integer.
    fn to_45ths(&self) -> Option<i64>;
}

/// Integer numerator over the fixed denominator 45.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fixed45(pub i64);

impl Fixed45 {
    pub const DEN: i64 = 45;
}

impl Add for Fixed45 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fixed45(self.0 + o.0)
    }
}

impl Sub for Fixed45 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fixed45(self.0 - o.0)
    }
}

impl Neg for Fixed45 {
    type Output = Self;
    fn neg(self) -> Self {
        Fixed45(-self.0)
    }
}

impl Zero for Fixed45 {
    fn zero() -> Self {
        Fixed45(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl Display for Fixed45 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/45", self.0)
    }
}

impl ExactScalar for Fixed45 {
    /// Panics unless `num / den` is a multiple of 1/45.
    fn ratio(num: i64, den: i64) -> Self {
        let scaled = num * Self::DEN;
        assert!(
            den != 0 && scaled % den == 0,
            "{num}/{den} is not a multiple of 1/45"
        );
        Fixed45(scaled / den)
    }

    fn to_45ths(&self) -> Option<i64> {
        Some(self.0)
    }
}

impl ExactScalar for Ratio<i64> {
    fn ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn to_45ths(&self) -> Option<i64> {
        let x = self * Ratio::from_integer(45);
        x.is_integer().then(|| x.to_integer())
    }
}

/// Lowest-terms rendering of a 45ths count: `-8`, `1/3`, `-2/15`.
pub fn reduced(p45: i64) -> String {
    let r = Ratio::new(p45, 45);
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
