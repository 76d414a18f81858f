use esss::diffrules::check_dd_zero;
use esss::emcoeffs::FieldId;
use esss::gradedalg::{group_string, order_profile, Order, TriDeg, Window};
use esss::sliceassembly::page::{e1_l_from_slices, kc_by_smith};
use esss::sliceassembly::{e1_groups, e1_page, Spectrum};

fn fields() -> Vec<FieldId> {
    vec![
        FieldId::AlgClosed,
        FieldId::fq(3).unwrap(),
        FieldId::fq(5).unwrap(),
        FieldId::fq(7).unwrap(),
        FieldId::fq(13).unwrap(),
        FieldId::qq(3).unwrap(),
        FieldId::qq(5).unwrap(),
        FieldId::Q2,
        FieldId::R,
        FieldId::rationals(&[3, 5, 7]).unwrap(),
    ]
}

#[test]
fn examples() {
    let g = e1_groups(&FieldId::AlgClosed, Spectrum::Kq, TriDeg::new(1, 1, 1));
    assert_eq!(group_string(&g, true), "ℤ/2{h₁}");
    let g = e1_groups(&FieldId::AlgClosed, Spectrum::L, TriDeg::new(-1, 1, 0));
    assert_eq!(group_string(&g, true), "ℤ{ι}");
    let g = e1_groups(&FieldId::fq(3).unwrap(), Spectrum::L, TriDeg::new(3, 1, 2));
    assert_eq!(group_string(&g, true), "ℤ/8{ιv₁²}");
}

#[test]
fn dd_zero_small() {
    let w = Window::new((-4, 14), (0, 16), (-6, 10));
    for f in fields() {
        for sp in [Spectrum::Kq, Spectrum::L] {
            let p = e1_page(&f, sp, w).unwrap_or_else(|e| panic!("{f} {sp}: {e}"));
            check_dd_zero(&p).unwrap_or_else(|e| panic!("{f} {sp}: {e}"));
        }
    }
}

#[test]
fn l_two_routes() {
    let w = Window::new((-3, 12), (0, 10), (-6, 8));
    for f in fields() {
        for d in w.degrees() {
            let mut a = order_profile(&e1_groups(&f, Spectrum::L, d));
            let mut b = e1_l_from_slices(&f, d);
            let (k, _) = kc_by_smith(&f, d).unwrap();
            let (_, c) = kc_by_smith(&f, d.sub(esss::sliceassembly::IOTA)).unwrap();
            let mut e: Vec<Order> = order_profile(&k);
            e.extend(order_profile(&c));
            a.sort();
            b.sort();
            e.sort();
            assert_eq!(a, b, "{f} {d}");
            assert_eq!(a, e, "{f} {d}");
        }
    }
}
