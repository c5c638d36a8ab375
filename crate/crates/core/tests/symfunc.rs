use std::collections::BTreeMap;

use repcalc_core::partitions::{dim_weyl, partitions_of};
use repcalc_core::rational::int;
use repcalc_core::symfunc::{plethysm_expand, product_expand, schur, schur_expand};
use repcalc_core::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn shapes_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(|k| partitions_of(k, None)).collect()
}

#[test]
fn schur_polynomials_expand_to_themselves() {
    for shape in shapes_up_to(5) {
        for n in shape.len().max(1)..=shape.size().max(1) as usize {
            let e = schur_expand(&schur(&shape, n)).unwrap();
            assert_eq!(e, BTreeMap::from([(shape.clone(), int(1))]), "{shape} in {n} variables");
        }
    }
}

#[test]
fn products_commute() {
    let shapes = shapes_up_to(4);
    for (i, a) in shapes.iter().enumerate() {
        for b in &shapes[i..] {
            assert_eq!(product_expand(a, b).unwrap(), product_expand(b, a).unwrap(), "{a} * {b}");
        }
    }
}

/// Specializing to n variables turns the product expansion into an identity
/// of GL_n dimensions.
#[test]
fn products_preserve_dimension() {
    let shapes = shapes_up_to(3);
    for a in &shapes {
        for b in &shapes {
            let e = product_expand(a, b).unwrap();
            assert!(e.keys().all(|l| l.size() == a.size() + b.size()));
            for n in 1..=4 {
                let lhs: u64 = e.iter().map(|(l, c)| c * dim_weyl(l, n)).sum();
                assert_eq!(lhs, dim_weyl(a, n) * dim_weyl(b, n), "{a} * {b}, n = {n}");
            }
        }
    }
}

/// s_π[s_μ] in n variables has dimension dim V_π(GL_d), d = dim V_μ(GL_n).
#[test]
fn plethysm_preserves_dimension() {
    for (outer, inner) in [("2", "2"), ("3", "2"), ("1,1", "2"), ("2", "1,1"), ("2", "2,1"), ("2,1", "2"), ("4", "2")] {
        let (o, i) = (p(outer), p(inner));
        let e = plethysm_expand(&o, &i, 12).unwrap();
        assert!(e.keys().all(|l| l.size() == o.size() * i.size()));
        for n in 1..=3 {
            let lhs: u64 = e.iter().map(|(l, c)| c * dim_weyl(l, n)).sum();
            let d = dim_weyl(&i, n) as u32;
            assert_eq!(lhs, dim_weyl(&o, d), "s_{o}[s_{i}], n = {n}");
        }
    }
}

#[test]
fn small_plethysms() {
    let e = plethysm_expand(&p("3"), &p("2"), 12).unwrap();
    assert_eq!(e, BTreeMap::from([(p("6"), 1), (p("4,2"), 1), (p("2,2,2"), 1)]));
    let e = plethysm_expand(&p("2"), &p("1,1"), 12).unwrap();
    assert_eq!(e, BTreeMap::from([(p("2,2"), 1), (p("1,1,1,1"), 1)]));
}
