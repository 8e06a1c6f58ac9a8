//! Every braided row: a Yetter–Drinfeld module of the expected braiding type,
//! with `dim R · |G| = p³`.

use pointed_hopf::catalog::{all_ids, build_braided, Tag};
use pointed_hopf::ydnichols::{classify_braiding, verify_yd, BraidingClass};

#[test]
fn braided_rows_are_yetter_drinfeld() {
    for id in all_ids(&[2, 3, 5]).into_iter().filter(|id| id.tag.is_braided()) {
        let r = build_braided(&id).unwrap();
        let (v, g) = r.yd_module().unwrap();
        assert!(verify_yd(&v, &g), "{}", id);
        let class = classify_braiding(&v).unwrap();
        let jordan = matches!(class, BraidingClass::Jordan { .. });
        assert_eq!(jordan, id.tag == Tag::RB, "{}: {:?}", id, class);
        let group: usize = r.braiding.orders().iter().map(|&o| o as usize).product();
        let dim = r.rs.enumerate_basis().unwrap().len();
        assert_eq!(dim * group, (id.p as usize).pow(3), "{}", id);
    }
}
