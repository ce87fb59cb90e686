//! The space model `H = {F1 = 0} ∩ {F2 = 0}` in `P³` with coordinates
//! `[X, Y, Z, T]`:
//!
//! ```text
//! F1 = σ(X² + XT + ρ²(Y² − XT − T²)) − (1 + ρ²)XY
//! F2 = 4XT − Y² + Z²
//! ```
//!
//! Four points of `H` are coplanar exactly when their divisor is a plane
//! section, so a plane through `O = [−1, 0, 2, 1]` and two further points
//! determines a fourth.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::form::{quadratic_on_forms, BinaryForm, Param};
use crate::projective::{nullspace, plane_through, proportional, PPoint3, Plane3};
use crate::rat::Rat;

use super::{HyperParams, QuarticPoint};

type Vec4 = [Rat; 4];
type Mat4 = [[Rat; 4]; 4];

/// Which of the two points `R`, `ι(R)` compose returns, where `ι` negates `Z`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The fourth intersection point itself.
    #[default]
    Literal,
    /// The fourth intersection point, moved by `ι` if needed so that
    /// `Z/T ≥ 0` (equivalently `x ≥ y` after projection).
    NonNegativeZ,
}

/// A point of `H`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpacePoint {
    point: PPoint3,
    params: HyperParams,
}

fn zero4() -> Vec4 {
    core::array::from_fn(|_| Rat::zero())
}

fn quadric_matrices(params: &HyperParams) -> (Mat4, Mat4) {
    let (sigma, rho2) = (params.sigma(), params.rho2());
    let half = Rat::frac(1, 2);
    let mut a1: Mat4 = core::array::from_fn(|_| zero4());
    a1[0][0] = sigma.clone();
    a1[1][1] = sigma * rho2;
    a1[3][3] = -(sigma * rho2);
    let xt = (sigma - &(sigma * rho2)) * &half;
    a1[0][3] = xt.clone();
    a1[3][0] = xt;
    let xy = -(Rat::one() + rho2) * &half;
    a1[0][1] = xy.clone();
    a1[1][0] = xy;
    let mut a2: Mat4 = core::array::from_fn(|_| zero4());
    a2[0][3] = Rat::int(2);
    a2[3][0] = Rat::int(2);
    a2[1][1] = Rat::int(-1);
    a2[2][2] = Rat::one();
    (a1, a2)
}

fn mat_vec(m: &Mat4, v: &Vec4) -> Vec4 {
    core::array::from_fn(|i| (0..4).map(|j| &m[i][j] * &v[j]).sum())
}

fn dot(a: &Vec4, b: &Vec4) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The symmetric bilinear form of `m`.
fn bilinear(m: &Mat4, a: &Vec4, b: &Vec4) -> Rat {
    dot(a, &mat_vec(m, b))
}

impl SpacePoint {
    pub fn new(params: HyperParams, point: PPoint3) -> Result<Self> {
        params.require_nonsingular()?;
        let p = SpacePoint { point, params };
        if !p.on_curve() {
            return Err(Error::NotOnCurve);
        }
        Ok(p)
    }

    pub fn point(&self) -> &PPoint3 {
        &self.point
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    pub fn coords(&self) -> &Vec4 {
        self.point.coords()
    }

    /// `(F1, F2)` at the integer representative.
    pub fn residues(&self) -> (Rat, Rat) {
        let (a1, a2) = quadric_matrices(&self.params);
        let c = self.coords();
        (bilinear(&a1, c, c), bilinear(&a2, c, c))
    }

    pub fn on_curve(&self) -> bool {
        let (f1, f2) = self.residues();
        f1.is_zero() && f2.is_zero()
    }

    pub fn is_base_point(&self) -> bool {
        self.point == base_point_coords()
    }

    /// `(X/T, Y/T, Z/T)`, when `T ≠ 0`.
    pub fn affine(&self) -> Option<[Rat; 3]> {
        self.point.affine()
    }

    /// The involution `[X, Y, Z, T] ↦ [X, Y, −Z, T]`.
    pub fn involution(&self) -> SpacePoint {
        let [x, y, z, t] = self.coords().clone();
        SpacePoint { point: PPoint3::new([x, y, -z, t]).unwrap(), params: self.params.clone() }
    }

    /// Applies the branch rule of [`compose`] to this point.
    pub fn with_branch(self, branch: Branch) -> SpacePoint {
        match branch {
            Branch::Literal => self,
            Branch::NonNegativeZ => {
                let c = self.coords();
                if (&c[2] * &c[3]).is_negative() {
                    self.involution()
                } else {
                    self
                }
            }
        }
    }
}

impl fmt::Debug for SpacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.affine() {
            Some([x, y, z]) => write!(f, "({x}, {y}, {z})"),
            None => write!(f, "{:?}", self.point),
        }
    }
}

fn base_point_coords() -> PPoint3 {
    PPoint3::new([Rat::int(-1), Rat::zero(), Rat::int(2), Rat::one()]).unwrap()
}

/// `O = [−1, 0, 2, 1]`, the image of the point `(1, −1)` of the quartic.
pub fn base_point(params: &HyperParams) -> Result<SpacePoint> {
    SpacePoint::new(params.clone(), base_point_coords())
}

/// `(x, y) ↦ [xy, x + y, x − y, 1]`.
pub fn lift_to_h(p: &QuarticPoint) -> SpacePoint {
    let (x, y) = (p.x(), p.y());
    let point = PPoint3::from_affine(&(x * y), &(x + y), &(x - y));
    SpacePoint { point, params: p.params().clone() }
}

/// `[X, Y, Z, T] ↦ ((Y + Z)/2T, (Y − Z)/2T)`.
pub fn project_to_q(p: &SpacePoint) -> Result<QuarticPoint> {
    let [_, y, z] = p.affine().ok_or(Error::InfinitePoint)?;
    let x = (&y + &z) / 2;
    let y = (&y - &z) / 2;
    QuarticPoint::new(p.params.clone(), x, y)
}

fn same_curve(p: &SpacePoint, q: &SpacePoint) -> Result<()> {
    if p.params != q.params {
        return Err(Error::CurveMismatch);
    }
    p.params.require_nonsingular()
}

/// A direction `v ≠ P` spanning, with `P`, the tangent line at `P`.
fn tangent_direction(a1: &Mat4, a2: &Mat4, p: &Vec4) -> Result<Vec4> {
    let ns = nullspace(&[mat_vec(a1, p), mat_vec(a2, p)]);
    if ns.len() != 2 {
        return Err(Error::SingularCurve);
    }
    ns.into_iter()
        .find(|v| !proportional(v, p))
        .ok_or(Error::Inconsistency("tangent space spanned by the point"))
}

/// A point `w` with `span(O, v, w)` the osculating plane at `O`: the
/// second-order conditions `vᵀAᵢv + 2(AᵢO)·w = 0`.
fn osculating_direction(a1: &Mat4, a2: &Mat4, o: &Vec4, v: &Vec4) -> Result<Vec4> {
    let row = |a: &Mat4| -> [Rat; 5] {
        let g = mat_vec(a, o);
        let k = bilinear(a, v, v) / 2;
        [g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone(), k]
    };
    let ns = nullspace(&[row(a1), row(a2)]);
    let sol = ns.iter().find(|s| !s[4].is_zero()).ok_or(Error::Inconsistency("no osculating direction"))?;
    let inv = sol[4].recip()?;
    let w: Vec4 = core::array::from_fn(|i| &sol[i] * &inv);
    Ok(w)
}

/// A plane section through `O`, described by a basis `{O, e1, e2}` and the
/// parameters (with multiplicities) of the known intersection points on the
/// conic `plane ∩ {F2 = 0}` parametrized from `O`.
struct Section {
    e1: Vec4,
    e2: Vec4,
    /// Multiplicities of `O`, `e1` (at `[1:0]`) and `e2` (at `[0:1]`).
    mult: [usize; 3],
}

fn section_for(p: &SpacePoint, q: &SpacePoint) -> Result<Section> {
    same_curve(p, q)?;
    let (a1, a2) = quadric_matrices(&p.params);
    let o = base_point_coords().into_coords();
    let (po, qo) = (p.is_base_point(), q.is_base_point());
    let (pc, qc) = (p.coords().clone(), q.coords().clone());
    Ok(match (po, qo, p == q) {
        (true, true, _) => {
            let v = tangent_direction(&a1, &a2, &o)?;
            let w = osculating_direction(&a1, &a2, &o, &v)?;
            Section { e1: v, e2: w, mult: [3, 0, 0] }
        }
        (true, false, _) => Section { e1: tangent_direction(&a1, &a2, &o)?, e2: qc, mult: [2, 0, 1] },
        (false, true, _) => Section { e1: tangent_direction(&a1, &a2, &o)?, e2: pc, mult: [2, 0, 1] },
        (false, false, true) => {
            let v = tangent_direction(&a1, &a2, &pc)?;
            Section { e1: pc, e2: v, mult: [1, 2, 0] }
        }
        (false, false, false) => Section { e1: pc, e2: qc, mult: [1, 1, 1] },
    })
}

/// The plane through `O` used to compose `P` and `Q`: through `O, P, Q`;
/// through `O` and the tangent line at `P` when `P = Q`; through the tangent
/// line at `O` and the other point when one of them is `O`; the osculating
/// plane at `O` when both are.
pub fn plane_for(p: &SpacePoint, q: &SpacePoint) -> Result<Plane3> {
    let sec = section_for(p, q)?;
    let o = base_point_coords().into_coords();
    plane_through(&o, &sec.e1, &sec.e2).ok_or(Error::Inconsistency("collinear plane basis"))
}

/// The fourth intersection of `plane_for(P, Q)` with `H`, after `branch`.
pub fn compose(p: &SpacePoint, q: &SpacePoint, branch: Branch) -> Result<SpacePoint> {
    let sec = section_for(p, q)?;
    let params = &p.params;
    let (a1, a2) = quadric_matrices(params);
    let o = base_point_coords().into_coords();
    if plane_through(&o, &sec.e1, &sec.e2).is_none() {
        return Err(Error::Inconsistency("collinear plane basis"));
    }
    let basis = [&o, &sec.e1, &sec.e2];
    let gram: [[Rat; 3]; 3] =
        core::array::from_fn(|i| core::array::from_fn(|j| bilinear(&a2, basis[i], basis[j])));
    let coords = if det3(&gram).is_zero() {
        let known: Vec<(Vec4, usize)> =
            (0..3).filter(|&i| sec.mult[i] > 0).map(|i| (basis[i].clone(), sec.mult[i])).collect();
        fourth_on_line_pair(&a1, &a2, basis, &gram, &known)?
    } else {
        fourth_on_conic(&a1, &o, &sec, &gram)?
    };
    let point = PPoint3::new(coords).map_err(|_| Error::DegenerateSection)?;
    let r = SpacePoint { point, params: params.clone() };
    if !r.on_curve() {
        return Err(Error::Inconsistency("fourth point off the curve"));
    }
    Ok(r.with_branch(branch))
}

/// Smooth section: lines through `O` meet the conic again at
/// `2L(u,v)(u·e1 + v·e2) − q(u,v)·O` with `L = B2(O, ·)` and
/// `q = F2(u·e1 + v·e2)`.
fn fourth_on_conic(a1: &Mat4, o: &Vec4, sec: &Section, gram: &[[Rat; 3]; 3]) -> Result<Vec4> {
    let l = BinaryForm::linear(gram[0][1].clone(), gram[0][2].clone());
    let qf = BinaryForm::new([gram[2][2].clone(), &gram[1][2] * 2, gram[1][1].clone()].to_vec());
    let two_l = l.scale(&Rat::int(2));
    let param: [BinaryForm; 4] = core::array::from_fn(|i| {
        let line = BinaryForm::linear(sec.e1[i].clone(), sec.e2[i].clone());
        &(&two_l * &line) + &qf.scale(&-o[i].clone())
    });
    let g = quadratic_on_forms(a1, &param);
    if g.is_zero() {
        return Err(Error::DegenerateSection);
    }
    let o_param = Param::new(gram[0][2].clone(), -gram[0][1].clone());
    let mut known: Vec<(Param, usize)> = Vec::new();
    for (root, m) in [
        (o_param, sec.mult[0]),
        (Param::new(Rat::one(), Rat::zero()), sec.mult[1]),
        (Param::new(Rat::zero(), Rat::one()), sec.mult[2]),
    ] {
        if m == 0 {
            continue;
        }
        match known.iter_mut().find(|(r, _)| r.same_as(&root)) {
            Some((_, k)) => *k += m,
            None => known.push((root, m)),
        }
    }
    debug_assert_eq!(known.iter().map(|(_, m)| m).sum::<usize>(), 3);
    let t = g.deflate(&known)?.linear_root()?;
    Ok(core::array::from_fn(|i| param[i].eval(&t.t0, &t.t1)))
}

/// Coefficients `c` with `Σ cᵢ·spanᵢ ∝ k`, if `k` lies in the span.
fn coords_in(span: &[&Vec4], k: &Vec4) -> Option<Vec<Rat>> {
    let n = span.len();
    let rows: Vec<[Rat; 4]> = (0..4)
        .map(|i| {
            core::array::from_fn(|j| {
                if j < n {
                    span[j][i].clone()
                } else if j == n {
                    k[i].clone()
                } else {
                    Rat::zero()
                }
            })
        })
        .collect();
    let ns = nullspace(&rows);
    let v = ns.iter().find(|v| !v[n].is_zero() && v[n + 1..].iter().all(Rat::is_zero))?;
    let scale = -v[n].recip().ok()?;
    Some((0..n).map(|j| &v[j] * &scale).collect())
}

fn span_point(coeffs: &[Rat], span: &[&Vec4]) -> Vec4 {
    core::array::from_fn(|i| coeffs.iter().zip(span).map(|(c, v)| c * &v[i]).sum())
}

/// Section by a plane tangent to `{F2 = 0}`: the conic is a pair of lines
/// through a point `W`. Each line meets `{F1 = 0}` twice; the known points
/// are removed line by line.
fn fourth_on_line_pair(
    a1: &Mat4,
    a2: &Mat4,
    basis: [&Vec4; 3],
    gram: &[[Rat; 3]; 3],
    known: &[(Vec4, usize)],
) -> Result<Vec4> {
    let ker = nullspace(gram);
    if ker.len() != 1 {
        return Err(Error::DegenerateSection);
    }
    let w = span_point(&ker[0], &basis);
    // two basis vectors completing W to a basis of the plane
    let (u1, u2) = [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(i, j)| (basis[i], basis[j]))
        .find(|(u1, u2)| plane_through(&w, u1, u2).is_some())
        .ok_or(Error::DegenerateSection)?;
    let restrict = |m: &Mat4, a: &Vec4, b: &Vec4| {
        let forms: [BinaryForm; 4] = core::array::from_fn(|i| BinaryForm::linear(a[i].clone(), b[i].clone()));
        quadratic_on_forms(m, &forms)
    };
    // directions of the two lines in the quotient by W
    let q = restrict(a2, u1, u2);
    let dirs_known: Vec<Param> = known
        .iter()
        .filter(|(k, _)| !proportional(k, &w))
        .filter_map(|(k, _)| coords_in(&[&w, u1, u2], k))
        .map(|c| Param::new(c[1].clone(), c[2].clone()))
        .collect();
    let d1 = dirs_known.first().ok_or(Error::DegenerateSection)?.clone();
    let d2 = q.divide_root(&d1)?.linear_root()?;
    let mut remaining: Vec<(Vec4, usize)> = known.to_vec();
    let mut rests: Vec<(Vec4, BinaryForm)> = Vec::new();
    for d in [d1, d2] {
        let dir = span_point(&[d.t0.clone(), d.t1.clone()], &[u1, u2]);
        let mut f = restrict(a1, &w, &dir);
        if f.is_zero() {
            return Err(Error::DegenerateSection);
        }
        for (k, m) in remaining.iter_mut() {
            let Some(c) = coords_in(&[&w, &dir], k) else { continue };
            let root = Param::new(c[0].clone(), c[1].clone());
            while *m > 0 && f.degree() > 0 && f.eval_at(&root).is_zero() {
                f = f.divide_root(&root)?;
                *m -= 1;
            }
        }
        rests.push((dir, f));
    }
    if remaining.iter().any(|(_, m)| *m > 0) {
        return Err(Error::Inconsistency("known point missing from the section"));
    }
    let mut open = rests.into_iter().filter(|(_, f)| f.degree() > 0);
    let (dir, f) = open.next().ok_or(Error::Inconsistency("no fourth point"))?;
    if open.next().is_some() || f.degree() != 1 {
        return Err(Error::Inconsistency("section multiplicities do not add up"));
    }
    let t = f.linear_root()?;
    Ok(span_point(&[t.t0, t.t1], &[&w, &dir]))
}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    &m[0][0] * &(&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * &(&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * &(&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The group law with identity `O`: `compose(O, compose(P, Q))`.
pub fn hyper_add(p: &SpacePoint, q: &SpacePoint) -> Result<SpacePoint> {
    let r = compose(p, q, Branch::Literal)?;
    let o = base_point(&p.params)?;
    compose(&o, &r, Branch::Literal)
}

/// `compose(compose(O, O), P)`.
pub fn hyper_neg(p: &SpacePoint) -> Result<SpacePoint> {
    let o = base_point(&p.params)?;
    let oo = compose(&o, &o, Branch::Literal)?;
    compose(&oo, p, Branch::Literal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyper::{point_from_triangle, triangle_from_point, HyperTriangle};
    use crate::rat;

    fn example_point() -> SpacePoint {
        let t = HyperTriangle::new([rat!(672, 697), rat!(104, 185), rat!(40, 41)]).unwrap();
        lift_to_h(&point_from_triangle(&t).unwrap())
    }

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn lift_and_project() {
        let p = example_point();
        assert!(p.on_curve());
        assert_eq!(p.affine().unwrap(), [rat!(163072, 796697), rat!(925344, 796697), rat!(580160, 796697)]);
        let q = project_to_q(&p).unwrap();
        assert_eq!((q.x(), q.y()), (&rat!(1456, 1541), &rat!(112, 517)));
        assert_eq!(project_to_q(&p.involution()).unwrap(), q.transpose());
        assert!(base_point(p.params()).unwrap().on_curve());
    }

    #[test]
    fn example_chain() {
        let p = example_point();
        let pp = compose(&p, &p, Branch::NonNegativeZ).unwrap();
        let d = "6671549185609843471";
        assert_eq!(
            pp.affine().unwrap(),
            [
                r(&format!("157101469162847924/{d}")),
                r(&format!("-3620500406298490680/{d}")),
                r(&format!("2985897265044714172/{d}")),
            ]
        );
        assert_eq!(compose(&p, &p, Branch::Literal).unwrap(), pp.involution());
        assert!(triangle_from_point(&project_to_q(&pp).unwrap()).is_err());

        let ppp = compose(&p, &pp, Branch::NonNegativeZ).unwrap();
        let q = project_to_q(&ppp).unwrap();
        assert_eq!(q.x(), &r("2072869433189638375660592/2186502887201310556520693"));
        assert_eq!(q.y(), &r("2539325917520154646338224/7493434444816664924429305"));
        let t = triangle_from_point(&q).unwrap();
        assert_eq!(t.tsides()[0], r("4938503954557916283489312/5070357052721862942058853"));
    }

    #[test]
    fn plane_normals() {
        let p = example_point();
        let tangent = plane_for(&p, &p).unwrap();
        let printed = [r("315005821528688640"), r("-1615149902619671040/11"), r("1807175612011392000/11")];
        assert!(proportional(&tangent.normal(), &printed));
        let pp = compose(&p, &p, Branch::NonNegativeZ).unwrap();
        let secant = plane_for(&p, &pp).unwrap();
        let printed = [
            r("13252388009067818908542000/5315203221527805463815287"),
            r("-274681775539499477051700/483200292866164133074117"),
            r("208376488637078243567400/113089430245272456676921"),
        ];
        assert!(proportional(&secant.normal(), &printed));
        assert!(secant.contains(&base_point_coords()));
    }

    #[test]
    fn section_tangent_to_the_quadric() {
        // the tangent line at P is a ruling of {F2 = 0}
        let t = HyperTriangle::new([rat!(1, 5), rat!(1, 5), rat!(7, 25)]).unwrap();
        let p = lift_to_h(&point_from_triangle(&t).unwrap());
        assert_eq!(p.coords(), &[rat!(1), rat!(24), rat!(10), rat!(119)]);
        let r = compose(&p, &p, Branch::Literal).unwrap();
        assert_eq!(r.coords(), &[rat!(0), rat!(1), rat!(1), rat!(1)]);
        let o = base_point(p.params()).unwrap();
        let n = hyper_neg(&p).unwrap();
        assert_eq!(hyper_add(&p, &n).unwrap(), o);
        assert_eq!(hyper_add(&p, &o).unwrap(), p);
    }

    #[test]
    fn group_axioms_on_example() {
        let p = example_point();
        let o = base_point(p.params()).unwrap();
        assert_eq!(hyper_add(&p, &o).unwrap(), p);
        assert_eq!(hyper_add(&o, &p).unwrap(), p);
        assert_eq!(hyper_add(&o, &o).unwrap(), o);
        let n = hyper_neg(&p).unwrap();
        assert_eq!(hyper_add(&p, &n).unwrap(), o);
        let q = hyper_add(&p, &p).unwrap();
        assert!(q.on_curve());
        assert_eq!(hyper_add(&q, &n).unwrap(), p);
        assert_eq!(hyper_add(&p, &q).unwrap(), hyper_add(&q, &p).unwrap());
    }
}
