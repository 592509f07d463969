mod common;

use common::*;
use orthoql::partial_op::{
    check_order, commuting_calculus, compose, decompose, norm_sq_is_one, op_eq, op_neq, projection_of, subspaces_of,
};
use orthoql::quotient::QuotientSpace;
use orthoql::{Error, Field, Matrix, OrthoSubspace, PartialOperator, PartialProjection, Scalar, Subspace, Vector};

fn sp(vs: &[&[i64]], n: usize) -> Subspace {
    Subspace::span(Field::Q, n, &vs.iter().map(|v| Vector::from_ints(v)).collect::<Vec<_>>()).unwrap()
}

fn osp(vs: &[&[i64]], n: usize) -> OSub {
    OSub::new(n, vs.iter().map(|v| ints(v)).collect())
}

fn o(one: &[&[i64]], zero: &[&[i64]], n: usize) -> OrthoSubspace {
    OrthoSubspace::new(sp(one, n), sp(zero, n)).unwrap()
}

fn q(p: i64, d: i64) -> C {
    C { re: Q::new(p.into(), d.into()), im: Q::from_integer(0.into()) }
}

#[test]
fn rref_of_rank_one_matrix() {
    let lib = Matrix::from_int_rows(&[&[2, 4], &[1, 2]]).rref();
    assert_eq!(lib.matrix, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
    assert_eq!(lib.rank, 1);
    assert_eq!(rank(&[ints(&[2, 4]), ints(&[1, 2])]), 1);
}

#[test]
fn null_space_of_sum_row() {
    let frozen = ints(&[-1, 1]);
    let oracle = kernel(&[ints(&[1, 1])], 2);
    assert_eq!(oracle, vec![frozen.clone()]);
    let lib = Matrix::from_int_rows(&[&[1, 1]]).null_space();
    assert_eq!(lib.cols(), 1);
    let col = from_vector(&lib.column(0));
    assert!(OSub::new(2, vec![col]).same(&OSub::new(2, vec![frozen])));
}

#[test]
fn solve_with_free_variable() {
    let x = Matrix::from_int_rows(&[&[1, 1]]).solve(&Vector::from_ints(&[2])).unwrap().unwrap();
    assert_eq!(x, Vector::from_ints(&[2, 0]));
    let ox = from_vector(&x);
    assert_eq!(ox[0].add(&ox[1]), C::int(2));
}

#[test]
fn gram_projection_of_diagonal() {
    let frozen = [[q(1, 2), q(1, 2)], [q(1, 2), q(1, 2)]];
    let line = osp(&[&[1, 1]], 2);
    for (k, row) in frozen.iter().enumerate() {
        assert_eq!(line.project(&unit(2, k)), vec![row[0].clone(), row[1].clone()]);
    }
    let lib = Matrix::gram_projection(&Matrix::from_int_rows(&[&[1], &[1]])).unwrap();
    for (r, row) in frozen.iter().enumerate() {
        for (c, want) in row.iter().enumerate() {
            assert_eq!(&from_scalar(lib.get(r, c)), want);
        }
    }
}

#[test]
fn meet_of_coordinate_planes() {
    let frozen = osp(&[&[0, 1, 0]], 3);
    let oracle = osp(&[&[1, 0, 0], &[0, 1, 0]], 3).meet(&osp(&[&[0, 1, 0], &[0, 0, 1]], 3));
    assert!(oracle.same(&frozen));
    let lib = sp(&[&[1, 0, 0], &[0, 1, 0]], 3).meet(&sp(&[&[0, 1, 0], &[0, 0, 1]], 3)).unwrap();
    assert_eq!(lib, sp(&[&[0, 1, 0]], 3));
    assert!(agrees(&lib, &frozen));
}

#[test]
fn containment_by_coefficients() {
    assert!(osp(&[&[1, 1], &[0, 1]], 2).contains(&ints(&[7, -2])));
    assert!(sp(&[&[1, 1], &[0, 1]], 2).contains(&Vector::from_ints(&[7, -2])).unwrap());
}

#[test]
fn distance_to_antidiagonal() {
    let frozen = Q::from_integer(2.into());
    assert_eq!(osp(&[&[1, -1]], 2).dist2(&ints(&[1, 1])), frozen);
    assert_eq!(sp(&[&[1, -1]], 2).distance_sq(&Vector::from_ints(&[1, 1])).unwrap(), frozen);
}

#[test]
fn swapped_coordinate_pairs() {
    let (a, b) = (o(&[&[1, 0]], &[&[0, 1]], 2), o(&[&[0, 1]], &[&[1, 0]], 2));
    let (oa, ob) = (from_ortho(&a), from_ortho(&b));
    let meet = a.meet(&b).unwrap();
    assert_eq!(meet, OrthoSubspace::bottom(Field::Q, 2));
    assert!(agrees_pair(&meet, &oa.meet(&ob)));
    let join = a.join(&b).unwrap();
    assert_eq!(join, OrthoSubspace::top(Field::Q, 2));
    assert!(agrees_pair(&join, &oa.join(&ob)));
    let imp = a.implies(&a).unwrap();
    assert_eq!(imp, OrthoSubspace::top(Field::Q, 2));
    assert!(agrees_pair(&imp, &oa.implies(&oa)));
}

#[test]
fn ordered_pair_in_q3() {
    let l = o(&[&[1, 0, 0]], &[&[0, 1, 0], &[0, 0, 1]], 3);
    let m = o(&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 0, 1]], 3);
    assert!(l.leq(&m).unwrap());
    assert!(from_ortho(&l).leq(&from_ortho(&m)));
}

#[test]
fn complql8_example() {
    let l = o(&[&[1, 0]], &[&[0, 1]], 2);
    let m = o(&[&[1, 0], &[0, 1]], &[], 2);
    let rhs = l.join(&m.minus(&l).unwrap()).unwrap();
    assert_eq!(rhs, m);
    let (ol, om) = (from_ortho(&l), from_ortho(&m));
    assert!(ol.join(&om.minus(&ol)).same(&om));
}

#[test]
fn decompose_diagonal_split() {
    let l = o(&[&[1, 1]], &[&[1, -1]], 2);
    let (f1, f0) = (ints(&[2, 2]), ints(&[1, -1]));
    let (o1, o0) = from_ortho(&l).split(&ints(&[3, 1])).unwrap();
    assert_eq!((o1.clone(), o0), (f1.clone(), f0.clone()));
    assert!(inner(&vsub(&ints(&[3, 1]), &o1), &ints(&[1, 1])).is_zero());
    let (l1, l0) = decompose(&l, &Vector::from_ints(&[3, 1])).unwrap();
    assert_eq!((from_vector(&l1), from_vector(&l0)), (f1, f0));
}

#[test]
fn projection_of_partial_line() {
    let p = projection_of(&o(&[&[1, 1]], &[], 2));
    assert!(agrees(p.dom(), &osp(&[&[1, 1]], 2)));
    for t in [-3, 1, 4] {
        let x = ints(&[t, t]);
        assert_eq!(osp(&[&[1, 1]], 2).project(&x), x);
        assert_eq!(p.apply(&to_vector(&x)).unwrap(), to_vector(&x));
    }
}

#[test]
fn subspaces_of_diagonal_projection() {
    let frozen_kernel = osp(&[&[1, -1]], 2);
    let g = Matrix::gram_projection(&Matrix::from_int_rows(&[&[1], &[1]])).unwrap();
    let rows: Vec<V> = (0..2).map(|r| (0..2).map(|c| from_scalar(g.get(r, c))).collect()).collect();
    assert!(OSub::new(2, kernel(&rows, 2)).same(&frozen_kernel));
    let p = PartialProjection::try_new(PartialOperator::new(Subspace::whole(Field::Q, 2), g).unwrap()).unwrap();
    let j = subspaces_of(&p);
    assert!(agrees(j.one(), &osp(&[&[1, 1]], 2)));
    assert!(agrees(j.zero(), &frozen_kernel));
}

#[test]
fn inequality_witness_by_rank() {
    let t = PartialOperator::new(sp(&[&[1, 0, 0], &[0, 1, 0]], 3), Matrix::zeros(3, 3)).unwrap();
    let u = PartialOperator::new(sp(&[&[1, 0, 0], &[0, 0, 1]], 3), Matrix::zeros(3, 3)).unwrap();
    let e2 = ints(&[0, 1, 0]);
    let (dt, du) = (osp(&[&[1, 0, 0], &[0, 1, 0]], 3), osp(&[&[1, 0, 0], &[0, 0, 1]], 3));
    assert!(dt.contains(&e2) && du.gens.iter().all(|g| inner(&e2, g).is_zero()));
    assert_eq!(dt.meet(&du.perp()).dim(), 1);
    assert_eq!(op_neq(&t, &u).unwrap(), Some(to_vector(&e2)));
}

#[test]
fn composite_domains_by_constraints() {
    let p = projection_of(&o(&[&[1, 0, 0]], &[&[0, 1, 0]], 3));
    let qq = projection_of(&o(&[&[1, 0, 0]], &[&[0, 0, 1]], 3));
    let (op, oq) = (from_operator(p.as_operator()), from_operator(qq.as_operator()));
    let frozen_qp = osp(&[&[1, 0, 0], &[0, 1, 0]], 3);
    let frozen_pq = osp(&[&[1, 0, 0], &[0, 0, 1]], 3);
    assert!(OOp::compose_dom(&oq, &op).same(&frozen_qp));
    assert!(OOp::compose_dom(&op, &oq).same(&frozen_pq));
    let qp = compose(qq.as_operator(), p.as_operator()).unwrap();
    let pq = compose(p.as_operator(), qq.as_operator()).unwrap();
    assert!(agrees(qp.dom(), &frozen_qp) && agrees(pq.dom(), &frozen_pq));
    assert_eq!(op_neq(&qp, &pq).unwrap(), Some(Vector::from_ints(&[0, 1, 0])));
    assert!(matches!(commuting_calculus(&p, &qq), Err(Error::NotCommuting(_))));
}

#[test]
fn order_clauses_expanded() {
    let l = o(&[&[1, 0, 0]], &[&[0, 1, 0], &[0, 0, 1]], 3);
    let m = o(&[&[1, 0, 0], &[0, 1, 0]], &[&[0, 0, 1]], 3);
    let (ol, om) = (from_ortho(&l), from_ortho(&m));
    let d = ol.dom().meet(&om.dom());
    let rem = ol.one.join(&ol.zero.meet(&om.one)).join(&om.zero);
    assert!(d.same(&rem) && d.dim() == 3);
    for b in &d.gens {
        assert!(norm2(&ol.one.project(b)) <= norm2(&om.one.project(b)));
        assert!(norm2(&om.zero.project(b)) <= norm2(&ol.zero.project(b)));
    }
    let r = check_order(&l, &m).unwrap();
    assert!(r.order_holds && r.clauses.clauses.iter().all(|(_, v)| v.holds()));

    let (a, b) = (o(&[&[1, 0]], &[&[0, 1]], 2), o(&[&[0, 1]], &[&[1, 0]], 2));
    assert!(!from_ortho(&a).leq(&from_ortho(&b)));
    let r = check_order(&a, &b).unwrap();
    assert!(!r.order_holds);
    let w = r.clause_i_equalities.expect("witness");
    assert_eq!(w.vectors[0].entries, vec!["1/1", "0/1"]);
}

#[test]
fn orthogonal_projections_add() {
    let p = projection_of(&OrthoSubspace::total(sp(&[&[1, 0]], 2)));
    let qq = projection_of(&OrthoSubspace::total(sp(&[&[0, 1]], 2)));
    let (op, oq) = (from_operator(p.as_operator()), from_operator(qq.as_operator()));
    for k in 0..2 {
        assert!(is_zero(&oq.apply(&op.apply(&unit(2, k)))));
        assert_eq!(vadd(&op.apply(&unit(2, k)), &oq.apply(&unit(2, k))), unit(2, k));
    }
    let r = commuting_calculus(&p, &qq).unwrap();
    assert!(r.clauses.clauses.iter().all(|(_, v)| v.holds()));
    let sum = p.as_operator().add(qq.as_operator()).unwrap();
    assert!(op_eq(p.join(&qq).unwrap().as_operator(), &sum).unwrap());
    assert_eq!(sum.matrix(), &Matrix::identity(2));
}

#[test]
fn partial_sum_domain() {
    let t = PartialOperator::new(sp(&[&[1, 0, 0], &[0, 1, 0]], 3), Matrix::identity(3)).unwrap();
    let u = PartialOperator::new(sp(&[&[0, 1, 0], &[0, 0, 1]], 3), Matrix::identity(3)).unwrap();
    let frozen = osp(&[&[0, 1, 0]], 3);
    assert!(from_subspace(t.dom()).meet(&from_subspace(u.dom())).same(&frozen));
    assert!(agrees(t.add(&u).unwrap().dom(), &frozen));
}

#[test]
fn contraction_certificate_for_diagonal() {
    let p = projection_of(&OrthoSubspace::total(sp(&[&[1, 1]], 2)));
    let line = osp(&[&[1, 1]], 2);
    for x in [ints(&[1, 0]), ints(&[0, 1]), ints(&[3, -5]), ints(&[1, 1])] {
        assert!(norm2(&line.project(&x)) <= norm2(&x));
    }
    assert_eq!(norm2(&line.project(&ints(&[1, 1]))), norm2(&ints(&[1, 1])));
    assert!(norm_sq_is_one(&p));
}

#[test]
fn quotient_inner_product() {
    let l = o(&[&[1, 0, 0]], &[&[0, 1, 0]], 3);
    let qs = QuotientSpace::new(l.clone());
    let ol = from_ortho(&l);
    let (x, y) = (ints(&[2, 3, 0]), ints(&[5, 3, 0]));
    let (_, x0) = ol.split(&x).unwrap();
    let (_, y0) = ol.split(&y).unwrap();
    assert_eq!(inner(&x0, &y0), C::int(9));
    assert_eq!(qs.q_inner(&to_vector(&x), &to_vector(&y)).unwrap(), Scalar::from_int(9));
    let z = ints(&[-4, 7, 0]);
    let (_, z0) = ol.split(&z).unwrap();
    assert_eq!(Q::from(qs.q_norm_sq(&to_vector(&z)).unwrap()), norm2(&z0));
    assert_eq!(norm2(&z0), Q::from_integer(49.into()));
}
