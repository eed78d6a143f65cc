//! Inputs shared by the benchmarks.

use ddrs_core::catalog::get_system;
use ddrs_core::{canonical_term, System, Term};
use num_bigint::BigInt;

/// `a*b` or `a+b` over canonical numerals of the system's own view.
pub fn numeral_pair(id: &str, a: i64, b: i64, times: bool) -> (&'static System, Term) {
    let sys = get_system(id).expect("catalog system");
    let n = |v: i64| canonical_term(&BigInt::from(v), sys.view()).expect("value in view");
    let t = if times {
        Term::times(n(a), n(b))
    } else {
        Term::plus(n(a), n(b))
    };
    (sys, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ddrs_core::eval_int;

    #[test]
    fn pairs_have_the_expected_value() {
        let (_, t) = numeral_pair("n1", 3, 4, true);
        assert_eq!(eval_int(&t), BigInt::from(12));
        let (_, t) = numeral_pair("d2", -2, 5, false);
        assert_eq!(eval_int(&t), BigInt::from(3));
    }
}
