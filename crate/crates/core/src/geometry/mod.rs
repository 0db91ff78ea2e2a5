//! Exact projective geometry of lines and smooth conics in P².
//!
//! Intersections are computed without extending the declared field: either the relevant
//! binary form splits over it (linear factors, rational roots, rational-square
//! discriminants) or the caller supplies the missing points as hints.

mod roots;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::GeometryError;
use crate::exactnum::{FieldElement, NumberField};

pub use roots::{binary_form_roots, FormRoot, Unresolved};

/// 3×3 matrix over the field, row-major.
pub type Mat3 = [[FieldElement; 3]; 3];

/// A point of P², stored with its first nonzero coordinate scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<Self, GeometryError> {
        Ok(ProjPoint {
            coords: canonical(coords)?,
        })
    }

    pub fn coords(&self) -> &[FieldElement; 3] {
        &self.coords
    }

    pub fn field(&self) -> &NumberField {
        self.coords[0].field()
    }

    /// Image under the linear map `x ↦ M x`.
    pub fn map(&self, m: &Mat3) -> Result<ProjPoint, GeometryError> {
        ProjPoint::new(mat_vec(m, &self.coords))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a} : {b} : {c})")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn canonical(coords: [FieldElement; 3]) -> Result<[FieldElement; 3], GeometryError> {
    let pivot = coords
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(GeometryError::ZeroVector)?;
    if pivot.is_one() {
        return Ok(coords);
    }
    let inv = pivot.inv().expect("nonzero");
    Ok(coords.map(|c| &c * &inv))
}

/// The line `a x + b y + c z = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    coeffs: [FieldElement; 3],
}

impl Line {
    pub fn new(coeffs: [FieldElement; 3]) -> Result<Self, GeometryError> {
        Ok(Line {
            coeffs: canonical(coeffs)?,
        })
    }

    pub fn coeffs(&self) -> &[FieldElement; 3] {
        &self.coeffs
    }

    pub fn field(&self) -> &NumberField {
        self.coeffs[0].field()
    }

    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        dot(&self.coeffs, p.coords())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Two points spanning the line.
    fn basis(&self) -> ([FieldElement; 3], [FieldElement; 3], usize) {
        let i = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("line coefficients are not all zero");
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let zero = self.field().zero();
        let mut p = [zero.clone(), zero.clone(), zero.clone()];
        let mut q = [zero.clone(), zero.clone(), zero];
        p[j] = self.coeffs[i].clone();
        p[i] = -&self.coeffs[j];
        q[k] = self.coeffs[i].clone();
        q[i] = -&self.coeffs[k];
        (p, q, i)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", linear_form_string(&self.coeffs))
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn linear_form_string(c: &[FieldElement; 3]) -> String {
    let vars = ["x", "y", "z"];
    let terms: Vec<String> = c
        .iter()
        .zip(vars)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, v)| {
            if c.is_one() {
                v.to_string()
            } else {
                format!("({c}){v}")
            }
        })
        .collect();
    terms.join(" + ")
}

/// A smooth conic given by a symmetric Gram matrix.
///
/// Stored up to scale: the first nonzero of the six coefficients
/// (x², y², z², xy, xz, yz) is normalised to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Conic {
    gram: Mat3,
}

impl Conic {
    pub fn new(gram: Mat3) -> Result<Self, GeometryError> {
        if (0..3).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(GeometryError::DegenerateConic);
        }
        if det3(&gram).is_zero() {
            return Err(GeometryError::DegenerateConic);
        }
        let conic = Conic { gram };
        let coeffs = conic.coefficients();
        let pivot = coeffs.iter().find(|c| !c.is_zero()).expect("nonzero");
        let inv = pivot.inv().expect("nonzero");
        Ok(Conic {
            gram: conic.gram.map(|row| row.map(|x| &x * &inv)),
        })
    }

    /// Conic from the coefficients of x², y², z², xy, xz, yz.
    pub fn from_coefficients(c: [FieldElement; 6]) -> Result<Self, GeometryError> {
        let field = c[0].field().clone();
        let half = field.from_int(2).inv().expect("characteristic zero");
        let [xx, yy, zz, xy, xz, yz] = c;
        let xy = &xy * &half;
        let xz = &xz * &half;
        let yz = &yz * &half;
        Conic::new([
            [xx, xy.clone(), xz.clone()],
            [xy, yy, yz.clone()],
            [xz, yz, zz],
        ])
    }

    /// Coefficients of x², y², z², xy, xz, yz.
    pub fn coefficients(&self) -> [FieldElement; 6] {
        let g = &self.gram;
        let two = self.field().from_int(2);
        [
            g[0][0].clone(),
            g[1][1].clone(),
            g[2][2].clone(),
            &two * &g[0][1],
            &two * &g[0][2],
            &two * &g[1][2],
        ]
    }

    pub fn gram(&self) -> &Mat3 {
        &self.gram
    }

    pub fn field(&self) -> &NumberField {
        self.gram[0][0].field()
    }

    fn bilinear(&self, p: &[FieldElement; 3], q: &[FieldElement; 3]) -> FieldElement {
        dot(p, &mat_vec(&self.gram, q))
    }

    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        self.bilinear(p.coords(), p.coords())
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// `Tᵀ G T`: the conic in coordinates `x = T x'`.
    pub fn pullback(&self, t: &Mat3) -> Result<Conic, GeometryError> {
        Conic::new(mat_mul(&transpose(t), &mat_mul(&self.gram, t)))
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x^2", "y^2", "z^2", "xy", "xz", "yz"];
        let terms: Vec<String> = self
            .coefficients()
            .iter()
            .zip(names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| {
                if c.is_one() {
                    v.to_string()
                } else {
                    format!("({c}){v}")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One member of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Member {
    Line(Line),
    Conic(Conic),
}

impl Member {
    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        match self {
            Member::Line(l) => l.eval(p),
            Member::Conic(q) => q.eval(p),
        }
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Tangent line at a point of the member; a line is its own tangent.
    pub fn tangent_at(&self, p: &ProjPoint) -> Result<Line, GeometryError> {
        match self {
            Member::Line(l) => {
                if l.contains(p) {
                    Ok(l.clone())
                } else {
                    Err(GeometryError::PointNotOnConic)
                }
            }
            Member::Conic(q) => conic_tangent_at(q, p),
        }
    }
}

/// Lines and smooth conics over one number field, pairwise distinct.
#[derive(Clone, Debug)]
pub struct Arrangement {
    field: NumberField,
    lines: Vec<Line>,
    conics: Vec<Conic>,
    point_hints: Vec<ProjPoint>,
}

impl Arrangement {
    pub fn new(
        field: NumberField,
        lines: Vec<Line>,
        conics: Vec<Conic>,
        point_hints: Vec<ProjPoint>,
    ) -> Result<Self, GeometryError> {
        if lines.is_empty() && conics.is_empty() {
            return Err(GeometryError::Empty);
        }
        let arr = Arrangement {
            field,
            lines,
            conics,
            point_hints,
        };
        let members = arr.members();
        for i in 0..members.len() {
            for j in 0..i {
                if members[i] == members[j] {
                    return Err(GeometryError::NotReduced(j, i));
                }
            }
        }
        Ok(arr)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn conics(&self) -> &[Conic] {
        &self.conics
    }

    pub fn point_hints(&self) -> &[ProjPoint] {
        &self.point_hints
    }

    pub fn d(&self) -> usize {
        self.lines.len()
    }

    pub fn k(&self) -> usize {
        self.conics.len()
    }

    /// Degree of the union curve, d + 2k.
    pub fn degree(&self) -> usize {
        self.d() + 2 * self.k()
    }

    /// Lines first (indices `0..d`), then conics (indices `d..d+k`).
    pub fn members(&self) -> Vec<Member> {
        self.lines
            .iter()
            .cloned()
            .map(Member::Line)
            .chain(self.conics.iter().cloned().map(Member::Conic))
            .collect()
    }

    /// The same arrangement in coordinates `x = T x'`; `t` must be invertible.
    pub fn change_coordinates(&self, t: &Mat3) -> Result<Arrangement, GeometryError> {
        let tt = transpose(t);
        let t_inv = mat_inverse(t).ok_or(GeometryError::ZeroVector)?;
        let lines = self
            .lines
            .iter()
            .map(|l| Line::new(mat_vec(&tt, l.coeffs())))
            .collect::<Result<_, _>>()?;
        let conics = self
            .conics
            .iter()
            .map(|q| q.pullback(t))
            .collect::<Result<_, _>>()?;
        let hints = self
            .point_hints
            .iter()
            .map(|p| p.map(&t_inv))
            .collect::<Result<_, _>>()?;
        Arrangement::new(self.field.clone(), lines, conics, hints)
    }
}

/// An intersection point of two members, flagged when the members are tangent there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub point: ProjPoint,
    pub transverse: bool,
}

pub fn line_line_meet(l1: &Line, l2: &Line) -> Result<ProjPoint, GeometryError> {
    if l1 == l2 {
        return Err(GeometryError::IdenticalLines);
    }
    ProjPoint::new(cross(l1.coeffs(), l2.coeffs()))
}

fn unresolved(u: Unresolved) -> GeometryError {
    GeometryError::NeedsHint {
        first: 0,
        second: 1,
        residual: u.residual,
        discriminant: u.discriminant,
    }
}

/// Intersection of a line with a smooth conic (one tangent point or two transverse points).
pub fn line_conic_meet(
    l: &Line,
    q: &Conic,
    hints: &[ProjPoint],
) -> Result<Vec<Intersection>, GeometryError> {
    let field = l.field();
    let (p0, p1, i) = l.basis();
    // q(s p0 + u p1) = s² q(p0) + 2 s u B(p0, p1) + u² q(p1)
    let two = field.from_int(2);
    let form = [
        q.bilinear(&p1, &p1),
        &two * &q.bilinear(&p0, &p1),
        q.bilinear(&p0, &p0),
    ];
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    let lead_inv = l.coeffs()[i].inv().expect("nonzero");
    let hint_params: Vec<(FieldElement, FieldElement)> = hints
        .iter()
        .filter(|h| l.contains(h) && q.contains(h))
        .map(|h| (&h.coords()[j] * &lead_inv, &h.coords()[k] * &lead_inv))
        .collect();
    let roots = binary_form_roots(field, &form, &hint_params).map_err(unresolved)?;
    let mut out = Vec::new();
    for r in roots {
        let coords: [FieldElement; 3] =
            std::array::from_fn(|c| &(&r.s * &p0[c]) + &(&r.u * &p1[c]));
        out.push(Intersection {
            point: ProjPoint::new(coords)?,
            transverse: r.multiplicity == 1,
        });
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

/// Intersection of two distinct smooth conics by resultant elimination.
pub fn conic_conic_meet(
    q1: &Conic,
    q2: &Conic,
    hints: &[ProjPoint],
) -> Result<Vec<Intersection>, GeometryError> {
    if q1 == q2 {
        return Err(GeometryError::IdenticalConics);
    }
    let field = q1.field().clone();
    let int = |n: i64| field.from_int(n);
    // Projection centre off both conics, moved to (0:0:1).
    let centres: [[i64; 3]; 8] = [
        [0, 0, 1],
        [0, 1, 0],
        [1, 0, 0],
        [1, 1, 1],
        [1, 2, 3],
        [1, -1, 2],
        [2, 3, 5],
        [3, -2, 7],
    ];
    let mut chosen = None;
    for c in centres {
        let pt = ProjPoint::new(c.map(int))?;
        if !q1.contains(&pt) && !q2.contains(&pt) {
            chosen = Some(pt);
            break;
        }
    }
    let centre = chosen.expect("two conics cannot contain all eight test points");
    let m = centre
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero");
    let (a, b) = ((m + 1) % 3, (m + 2) % 3);
    let mut t: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| field.zero()));
    t[a][0] = field.one();
    t[b][1] = field.one();
    for (row, c) in t.iter_mut().zip(centre.coords()) {
        row[2] = c.clone();
    }
    let t_inv = mat_inverse(&t).expect("invertible by construction");
    let g1 = mat_mul(&transpose(&t), &mat_mul(q1.gram(), &t));
    let g2 = mat_mul(&transpose(&t), &mat_mul(q2.gram(), &t));

    // q = A Z² + B Z + C with B linear and C quadratic in (X, Y); forms stored as
    // coefficient vectors indexed by the power of X.
    let two = int(2);
    let parts = |g: &Mat3| {
        let a = g[2][2].clone();
        let b = vec![&two * &g[1][2], &two * &g[0][2]];
        let c = vec![g[1][1].clone(), &two * &g[0][1], g[0][0].clone()];
        (a, b, c)
    };
    let (a1, b1, c1) = parts(&g1);
    let (a2, b2, c2) = parts(&g2);
    let u = form_sub(&form_scale(&c2, &a1), &form_scale(&c1, &a2));
    let v = form_sub(&form_scale(&b2, &a1), &form_scale(&b1, &a2));
    let w = form_sub(&form_mul(&b1, &c2), &form_mul(&b2, &c1));
    let resultant = form_sub(&form_mul(&u, &u), &form_mul(&v, &w));

    let hint_params: Vec<(FieldElement, FieldElement)> = hints
        .iter()
        .filter(|h| q1.contains(h) && q2.contains(h))
        .map(|h| {
            let local = mat_vec(&t_inv, h.coords());
            (local[0].clone(), local[1].clone())
        })
        .collect();
    let roots = binary_form_roots(&field, &resultant, &hint_params).map_err(unresolved)?;

    let mut points = Vec::new();
    for r in roots {
        let (x0, y0) = (r.s, r.u);
        let eval_lin = |f: &[FieldElement]| &(&f[0] * &y0) + &(&f[1] * &x0);
        let eval_quad = |f: &[FieldElement]| {
            &(&(&f[0] * &y0) * &y0) + &(&(&(&f[1] * &x0) * &y0) + &(&(&f[2] * &x0) * &x0))
        };
        let (bb1, cc1) = (eval_lin(&b1), eval_quad(&c1));
        let (bb2, cc2) = (eval_lin(&b2), eval_quad(&c2));
        // a2·q1 − a1·q2 restricted to the fibre is linear in Z.
        let lin = &(&a2 * &bb1) - &(&a1 * &bb2);
        let cst = &(&a2 * &cc1) - &(&a1 * &cc2);
        let zs: Vec<(FieldElement, FieldElement)> = if !lin.is_zero() {
            vec![(-cst, lin)]
        } else if cst.is_zero() {
            // both conics cut the fibre in the same pair of points
            let fibre_hints: Vec<(FieldElement, FieldElement)> = hints
                .iter()
                .map(|h| mat_vec(&t_inv, h.coords()))
                .filter(|l| (&(&l[0] * &y0) - &(&l[1] * &x0)).is_zero())
                .map(|l| {
                    let scale = if !x0.is_zero() {
                        &l[0] * &x0.inv().expect("nonzero")
                    } else {
                        &l[1] * &y0.inv().expect("nonzero")
                    };
                    (l[2].clone(), scale)
                })
                .collect();
            binary_form_roots(
                &field,
                &[cc1.clone(), bb1.clone(), a1.clone()],
                &fibre_hints,
            )
            .map_err(unresolved)?
            .into_iter()
            .map(|r| (r.s, r.u))
            .collect()
        } else {
            vec![]
        };
        for (zn, zd) in zs {
            // point (x0 zd : y0 zd : zn) in local coordinates
            let local = [&x0 * &zd, &y0 * &zd, zn];
            let pt = ProjPoint::new(mat_vec(&t, &local))?;
            if q1.contains(&pt) && q2.contains(&pt) && !points.contains(&pt) {
                points.push(pt);
            }
        }
    }
    let mut out = Vec::new();
    for pt in points {
        let transverse = conic_tangent_at(q1, &pt)? != conic_tangent_at(q2, &pt)?;
        out.push(Intersection {
            point: pt,
            transverse,
        });
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

fn form_scale(f: &[FieldElement], c: &FieldElement) -> Vec<FieldElement> {
    f.iter().map(|x| x * c).collect()
}

fn form_sub(f: &[FieldElement], g: &[FieldElement]) -> Vec<FieldElement> {
    let field = f.first().or(g.first()).expect("nonempty").field().clone();
    let n = f.len().max(g.len());
    let zero = field.zero();
    (0..n)
        .map(|i| f.get(i).unwrap_or(&zero) - g.get(i).unwrap_or(&zero))
        .collect()
}

fn form_mul(f: &[FieldElement], g: &[FieldElement]) -> Vec<FieldElement> {
    let field = f[0].field().clone();
    let mut out = vec![field.zero(); f.len() + g.len() - 1];
    for (i, x) in f.iter().enumerate() {
        for (j, y) in g.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Tangent (polar) line of a smooth conic at one of its points.
pub fn conic_tangent_at(q: &Conic, p: &ProjPoint) -> Result<Line, GeometryError> {
    if !q.contains(p) {
        return Err(GeometryError::PointNotOnConic);
    }
    Line::new(mat_vec(q.gram(), p.coords()))
}

fn member_meet(
    a: &Member,
    b: &Member,
    hints: &[ProjPoint],
) -> Result<Vec<Intersection>, GeometryError> {
    match (a, b) {
        (Member::Line(l1), Member::Line(l2)) => Ok(vec![Intersection {
            point: line_line_meet(l1, l2)?,
            transverse: true,
        }]),
        (Member::Line(l), Member::Conic(q)) | (Member::Conic(q), Member::Line(l)) => {
            line_conic_meet(l, q, hints)
        }
        (Member::Conic(q1), Member::Conic(q2)) => conic_conic_meet(q1, q2, hints),
    }
}

/// A point where at least two members meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: ProjPoint,
    /// Indices into [`Arrangement::members`], increasing.
    pub incident_members: Vec<usize>,
    pub multiplicity: usize,
}

/// A pair of members meeting non-transversally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangency {
    pub first: usize,
    pub second: usize,
    pub point: ProjPoint,
}

/// Singular points together with every tangency detected while intersecting.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub points: Vec<SingularPoint>,
    pub tangencies: Vec<Tangency>,
}

/// All pairwise intersections, deduplicated, with incidences re-verified by substitution.
pub fn singular_locus(arr: &Arrangement) -> Result<SingularLocus, GeometryError> {
    let members = arr.members();
    let n = members.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    type PairMeet = (usize, usize, Vec<Intersection>);
    let results: Vec<Result<PairMeet, GeometryError>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            member_meet(&members[i], &members[j], arr.point_hints())
                .map(|pts| (i, j, pts))
                .map_err(|e| match e {
                    GeometryError::NeedsHint {
                        residual,
                        discriminant,
                        ..
                    } => GeometryError::NeedsHint {
                        first: i,
                        second: j,
                        residual,
                        discriminant,
                    },
                    other => other,
                })
        })
        .collect();
    let mut seen: HashSet<ProjPoint> = HashSet::new();
    let mut tangencies = Vec::new();
    for res in results {
        let (i, j, pts) = res?;
        for x in pts {
            if !x.transverse {
                tangencies.push(Tangency {
                    first: i,
                    second: j,
                    point: x.point.clone(),
                });
            }
            seen.insert(x.point);
        }
    }
    let mut sorted: Vec<ProjPoint> = seen.into_iter().collect();
    sorted.sort();
    let points = sorted
        .into_par_iter()
        .map(|p| {
            let incident: Vec<usize> = (0..n).filter(|&m| members[m].contains(&p)).collect();
            SingularPoint {
                multiplicity: incident.len(),
                incident_members: incident,
                point: p,
            }
        })
        .collect();
    tangencies.sort_by(|a, b| (&a.point, a.first, a.second).cmp(&(&b.point, b.first, b.second)));
    Ok(SingularLocus { points, tangencies })
}

pub fn singular_points(arr: &Arrangement) -> Result<Vec<SingularPoint>, GeometryError> {
    Ok(singular_locus(arr)?.points)
}

/// Ordinary-singularity verdict at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryVerdict {
    pub point: ProjPoint,
    pub ordinary: bool,
    /// Two members sharing a tangent direction at the point, when not ordinary.
    pub offending: Option<(usize, usize)>,
}

/// Checks that the branches through each singular point have pairwise distinct tangents.
pub fn verify_ordinary_locus(
    arr: &Arrangement,
    locus: &SingularLocus,
) -> Result<Vec<OrdinaryVerdict>, GeometryError> {
    let members = arr.members();
    let mut flagged: BTreeMap<&ProjPoint, (usize, usize)> = BTreeMap::new();
    for t in &locus.tangencies {
        flagged.entry(&t.point).or_insert((t.first, t.second));
    }
    locus
        .points
        .iter()
        .map(|sp| {
            let tangents = sp
                .incident_members
                .iter()
                .map(|&m| members[m].tangent_at(&sp.point))
                .collect::<Result<Vec<_>, _>>()?;
            let mut offending = None;
            'outer: for a in 0..tangents.len() {
                for b in a + 1..tangents.len() {
                    if tangents[a] == tangents[b] {
                        offending = Some((sp.incident_members[a], sp.incident_members[b]));
                        break 'outer;
                    }
                }
            }
            if offending.is_none() {
                offending = flagged.get(&sp.point).copied();
            }
            Ok(OrdinaryVerdict {
                point: sp.point.clone(),
                ordinary: offending.is_none(),
                offending,
            })
        })
        .collect()
}

pub fn verify_ordinary(arr: &Arrangement) -> Result<Vec<OrdinaryVerdict>, GeometryError> {
    let locus = singular_locus(arr)?;
    verify_ordinary_locus(arr, &locus)
}

pub(crate) fn dot(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> FieldElement {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub(crate) fn cross(a: &[FieldElement; 3], b: &[FieldElement; 3]) -> [FieldElement; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn mat_vec(m: &Mat3, v: &[FieldElement; 3]) -> [FieldElement; 3] {
    std::array::from_fn(|r| dot(&m[r], v))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let bt = transpose(b);
    std::array::from_fn(|r| std::array::from_fn(|c| dot(&a[r], &bt[c])))
}

pub fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| m[c][r].clone()))
}

pub fn det3(m: &Mat3) -> FieldElement {
    dot(&m[0], &cross(&m[1], &m[2]))
}

pub fn mat_inverse(m: &Mat3) -> Option<Mat3> {
    let det = det3(m);
    let inv = det.inv()?;
    // columns of the adjugate are cross products of rows
    let cols = [
        cross(&m[1], &m[2]),
        cross(&m[2], &m[0]),
        cross(&m[0], &m[1]),
    ];
    Some(std::array::from_fn(|r| {
        std::array::from_fn(|c| &cols[c][r] * &inv)
    }))
}
