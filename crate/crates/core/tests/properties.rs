use proptest::prelude::*;

use qalg::arith::{factorize, is_prime, jacobi, legendre, mod_pow, squarefree_kernel, OddPrime};
use qalg::localsym::{hilbert, ramified_places, Place};
use qalg::quadfield::{decompose, splits_completely, DecompositionType, QuadraticField};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn odd_primes_to_97() -> Vec<u64> {
    (3..=97).filter(|&n| is_prime(n as i64)).collect()
}

fn place() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Real),
        proptest::sample::select(SMALL_PRIMES.to_vec()).prop_map(|p| Place::finite(p).unwrap()),
    ]
}

fn odd_prime() -> impl Strategy<Value = OddPrime> {
    proptest::sample::select(odd_primes_to_97()).prop_map(|p| OddPrime::new(p).unwrap())
}

fn nonzero(bound: i64) -> impl Strategy<Value = i64> {
    (-bound..=bound).prop_filter("nonzero", |&x| x != 0)
}

#[test]
fn legendre_matches_scan_of_squares() {
    for p in odd_primes_to_97() {
        let op = OddPrime::new(p).unwrap();
        let squares: Vec<u64> = (1..p).map(|x| x * x % p).collect();
        for a in 0..p {
            let expected = if a == 0 {
                0
            } else if squares.contains(&a) {
                1
            } else {
                -1
            };
            assert_eq!(legendre(a as i64, op), expected, "({a}/{p})");
        }
    }
}

proptest! {
    #[test]
    fn legendre_is_multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000, p in odd_prime()) {
        prop_assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
    }

    #[test]
    fn legendre_is_euler_criterion(a in any::<i64>(), p in odd_prime()) {
        let e = mod_pow(a, (p.get() - 1) / 2, p.get()).unwrap();
        let normalized: i8 = if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
        prop_assert_eq!(legendre(a, p), normalized);
    }

    #[test]
    fn jacobi_reciprocity(a in 0i64..5_000, n in 0i64..5_000) {
        let (a, n) = (2 * a + 1, 2 * n + 1);
        let g = num_gcd(a, n);
        prop_assume!(g == 1);
        let sign = if ((a - 1) / 2) * ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(jacobi(a, n).unwrap() * jacobi(n, a).unwrap(), sign);
    }

    #[test]
    fn jacobi_is_product_of_legendre(a in any::<i64>(), n in 0i64..20_000) {
        let n = 2 * n + 1;
        let mut expected: i8 = 1;
        for (p, e) in factorize(n).unwrap().factors {
            expected *= legendre(a, OddPrime::new(p).unwrap()).pow(e);
        }
        prop_assert_eq!(jacobi(a, n).unwrap(), expected);
    }

    #[test]
    fn factorization_round_trips(m in 1i64..1 << 40, shift in 0u32..20, negative in any::<bool>()) {
        let n = if negative { -(m << shift) } else { m << shift };
        let f = factorize(n).unwrap();
        prop_assert_eq!(f.product(), n as i128);
        prop_assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert!(f.factors.iter().all(|&(p, _)| is_prime(p as i64)));
    }

    #[test]
    fn kernel_is_idempotent_and_leaves_a_square(n in nonzero(1_000_000)) {
        let k = squarefree_kernel(n).unwrap();
        prop_assert_eq!(squarefree_kernel(k).unwrap(), k);
        prop_assert_eq!(n % k, 0);
        let s = n / k;
        prop_assert!(s > 0);
        let r = (s as f64).sqrt().round() as i64;
        prop_assert_eq!(r * r, s);
    }

    #[test]
    fn hilbert_is_symmetric(a in nonzero(5_000), b in nonzero(5_000), v in place()) {
        prop_assert_eq!(hilbert(a, b, v).unwrap(), hilbert(b, a, v).unwrap());
    }

    #[test]
    fn hilbert_is_bimultiplicative(a in nonzero(3_000), a2 in nonzero(3_000), b in nonzero(3_000), v in place()) {
        prop_assert_eq!(
            hilbert(a * a2, b, v).unwrap(),
            hilbert(a, b, v).unwrap() * hilbert(a2, b, v).unwrap()
        );
    }

    #[test]
    fn hilbert_steinberg_relations(a in nonzero(1_000_000), v in place()) {
        prop_assert_eq!(hilbert(a, -a, v).unwrap().value(), 1);
        prop_assume!(a != 1);
        prop_assert_eq!(hilbert(a, 1 - a, v).unwrap().value(), 1);
    }

    #[test]
    fn hilbert_ignores_squares(a in nonzero(10_000), b in nonzero(10_000), c in nonzero(300), v in place()) {
        prop_assert_eq!(hilbert(a * c * c, b, v).unwrap(), hilbert(a, b, v).unwrap());
    }

    #[test]
    fn ramified_sets_are_even_and_supported_on_2ab(a in nonzero(100_000), b in nonzero(100_000)) {
        let r = ramified_places(a, b).unwrap();
        prop_assert_eq!(r.len() % 2, 0);
        for v in r {
            if let Some(p) = v.prime() {
                prop_assert!((2 * a as i128 * b as i128) % p as i128 == 0);
            }
        }
    }

    #[test]
    fn decomposition_follows_discriminant(d in -500i64..500, p in odd_prime()) {
        let Ok(f) = QuadraticField::new(d) else { return Ok(()) };
        let v = Place::finite(p.get()).unwrap();
        let kind = decompose(&f, v);
        prop_assert_eq!(kind == DecompositionType::Ramified, f.discriminant() % p.get() as i64 == 0);
        match legendre(f.discriminant(), p) {
            1 => prop_assert_eq!(kind, DecompositionType::Split),
            -1 => prop_assert_eq!(kind, DecompositionType::Inert),
            _ => {}
        }
        if f.discriminant() % p.get() as i64 != 0 {
            prop_assert_eq!(splits_completely(&f, v), legendre(d, p) == 1);
        }
    }
}

#[test]
fn two_adic_decomposition_partitions_residues() {
    let two = Place::finite(2).unwrap();
    for d in -400i64..400 {
        let Ok(f) = QuadraticField::new(d) else {
            continue;
        };
        let expected = match d.rem_euclid(8) {
            1 => DecompositionType::Split,
            5 => DecompositionType::Inert,
            _ => DecompositionType::Ramified,
        };
        assert_eq!(decompose(&f, two), expected);
        assert!(matches!(d.rem_euclid(4), 1..=3));
        assert!(matches!(f.discriminant().rem_euclid(4), 0 | 1));
    }
}

fn num_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}
