//! Tracing the divide curve cut out of the standard diagonal lattice by a
//! placed region.
//!
//! The curve is the intersection of `{cos(pi x) = cos(pi y)}` with the
//! region: one diagonal segment per unit square, joining the two corners of
//! even coordinate sum. Walking the segments with reflection at the boundary
//! splits the curve into arcs (ending at convex corners of even sum) and
//! circles, and every interior lattice point of even sum is a crossing.

use thiserror::Error;

use crate::lshape::{LRegion, Rect};

type Point = (i64, i64);

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("the concave corner at {0:?} has even coordinate sum, so the curve runs through it")]
    ConcaveViolation((i64, i64)),
    #[error("inconsistent walk state at {at:?}: {what}")]
    Inconsistent { at: (i64, i64), what: &'static str },
}

/// A region shape together with its lattice placement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RegionShape {
    L(LRegion),
    Rect(Rect),
}

/// A region translated so that its concave corner (if any) has odd
/// coordinate sum, which keeps the curve away from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlacedRegion {
    shape: RegionShape,
    offset: (i64, i64),
}

/// Place an L-shaped region: offset `(0,0)` when `a1 + b1` is already odd,
/// `(1,0)` otherwise.
pub fn place(r: &LRegion) -> PlacedRegion {
    let (a1, b1) = r.concave();
    let offset = if (a1 + b1) % 2 == 1 { (0, 0) } else { (1, 0) };
    PlacedRegion {
        shape: RegionShape::L(*r),
        offset,
    }
}

/// Place a rectangle at the origin (it has no concave corner).
pub fn place_rect(r: &Rect) -> PlacedRegion {
    PlacedRegion {
        shape: RegionShape::Rect(*r),
        offset: (0, 0),
    }
}

impl PlacedRegion {
    pub fn shape(&self) -> &RegionShape {
        &self.shape
    }

    pub fn offset(&self) -> (i64, i64) {
        self.offset
    }

    /// The placed concave corner, for L shapes.
    pub fn concave_corner(&self) -> Option<(i64, i64)> {
        match self.shape {
            RegionShape::L(r) => {
                let (x, y) = r.concave();
                Some((x + self.offset.0, y + self.offset.1))
            }
            RegionShape::Rect(_) => None,
        }
    }

    /// The boundary polygon, counterclockwise from the lower-left corner.
    pub fn corners(&self) -> Vec<(i64, i64)> {
        let (ox, oy) = self.offset;
        let pts = match self.shape {
            RegionShape::L(r) => vec![
                (0, 0),
                (r.a2(), 0),
                (r.a2(), r.b1()),
                (r.a1(), r.b1()),
                (r.a1(), r.b2()),
                (0, r.b2()),
            ],
            RegionShape::Rect(r) => vec![(0, 0), (r.a(), 0), (r.a(), r.b()), (0, r.b())],
        };
        pts.into_iter().map(|(x, y)| (x + ox, y + oy)).collect()
    }

    fn bbox(&self) -> ((i64, i64), (i64, i64)) {
        let (ox, oy) = self.offset;
        let (w, h) = match self.shape {
            RegionShape::L(r) => (r.a2(), r.b2()),
            RegionShape::Rect(r) => (r.a(), r.b()),
        };
        ((ox, oy), (ox + w, oy + h))
    }

    fn contains(&self, p: (i64, i64)) -> bool {
        let x = p.0 - self.offset.0;
        let y = p.1 - self.offset.1;
        match self.shape {
            RegionShape::L(r) => {
                (0 <= x && x <= r.a2() && 0 <= y && y <= r.b1())
                    || (0 <= x && x <= r.a1() && 0 <= y && y <= r.b2())
            }
            RegionShape::Rect(r) => 0 <= x && x <= r.a() && 0 <= y && y <= r.b(),
        }
    }
}

/// The minimal view of a placed region the tracer needs. Tests use it to
/// check invariance of the statistics under lattice symmetries.
pub(crate) trait LatticePatch {
    fn contains(&self, p: (i64, i64)) -> bool;
    fn bbox(&self) -> ((i64, i64), (i64, i64));
}

impl LatticePatch for PlacedRegion {
    fn contains(&self, p: (i64, i64)) -> bool {
        PlacedRegion::contains(self, p)
    }

    fn bbox(&self) -> ((i64, i64), (i64, i64)) {
        PlacedRegion::bbox(self)
    }
}

/// Summary statistics of the traced curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivideTrace {
    /// Immersed arcs, each joining two convex corners of even sum.
    pub arcs: usize,
    /// Closed immersed circles.
    pub circles: usize,
    /// Arc endpoints, two per arc in trace order.
    pub endpoints: Vec<(i64, i64)>,
    /// Interior lattice points of even sum, each a transverse crossing.
    pub double_point_count: usize,
    /// Symmetric matrix of crossing counts between components (diagonal:
    /// self-crossings). Components are numbered arcs first, then circles.
    pub intersections: Vec<Vec<usize>>,
}

impl DivideTrace {
    pub fn components(&self) -> usize {
        self.arcs + self.circles
    }
}

/// Whether the traced curve is a single immersed arc.
pub fn is_immersed_arc(t: &DivideTrace) -> bool {
    t.arcs == 1 && t.circles == 0
}

/// A diagonal segment of the curve, tagged with its component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Segment {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub component: usize,
}

/// The full traversal: summary statistics plus each component's polyline
/// through the lattice (closed components do not repeat their first point).
#[derive(Clone, Debug)]
pub struct TracedCurve {
    pub summary: DivideTrace,
    pub paths: Vec<Vec<(i64, i64)>>,
    pub closed: Vec<bool>,
    pub crossings: Vec<(i64, i64)>,
}

pub fn trace(p: &PlacedRegion) -> Result<DivideTrace, TraceError> {
    Ok(trace_curve(p)?.summary)
}

/// Trace and return the curve geometry: every segment with its component
/// id, ordered along each component.
pub fn curve_geometry(p: &PlacedRegion) -> Result<Vec<Segment>, TraceError> {
    let curve = trace_curve(p)?;
    let mut segments = Vec::new();
    for (component, (path, &closed)) in curve.paths.iter().zip(&curve.closed).enumerate() {
        for pair in path.windows(2) {
            segments.push(Segment {
                from: pair[0],
                to: pair[1],
                component,
            });
        }
        if closed {
            segments.push(Segment {
                from: *path.last().unwrap(),
                to: path[0],
                component,
            });
        }
    }
    Ok(segments)
}

pub fn trace_curve(p: &PlacedRegion) -> Result<TracedCurve, TraceError> {
    trace_patch(p)
}

/// How many of the four unit squares around a point lie in the region, and
/// which ones (bit 0: upper right, 1: upper left, 2: lower left, 3: lower
/// right).
fn square_mask<P: LatticePatch>(patch: &P, p: (i64, i64)) -> u8 {
    let sq = |q: (i64, i64)| {
        patch.contains(q)
            && patch.contains((q.0 + 1, q.1))
            && patch.contains((q.0, q.1 + 1))
            && patch.contains((q.0 + 1, q.1 + 1))
    };
    let mut mask = 0;
    if sq(p) {
        mask |= 1;
    }
    if sq((p.0 - 1, p.1)) {
        mask |= 2;
    }
    if sq((p.0 - 1, p.1 - 1)) {
        mask |= 4;
    }
    if sq((p.0, p.1 - 1)) {
        mask |= 8;
    }
    mask
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PointKind {
    Interior,
    VerticalEdge,
    HorizontalEdge,
    ConvexCorner,
    ConcaveCorner,
    Outside,
}

fn classify(mask: u8) -> PointKind {
    match mask {
        0b1111 => PointKind::Interior,
        0b0011 | 0b1100 => PointKind::HorizontalEdge,
        0b0110 | 0b1001 => PointKind::VerticalEdge,
        0b0001 | 0b0010 | 0b0100 | 0b1000 => PointKind::ConvexCorner,
        0b0111 | 0b1110 | 0b1101 | 0b1011 => PointKind::ConcaveCorner,
        _ => PointKind::Outside,
    }
}

/// The inward diagonal at a convex corner.
fn corner_direction(mask: u8) -> (i64, i64) {
    match mask {
        0b0001 => (1, 1),
        0b0010 => (-1, 1),
        0b0100 => (-1, -1),
        0b1000 => (1, -1),
        _ => unreachable!("not a convex corner mask"),
    }
}

pub(crate) fn trace_patch<P: LatticePatch>(patch: &P) -> Result<TracedCurve, TraceError> {
    let ((x0, y0), (x1, y1)) = patch.bbox();
    let width = (x1 - x0 + 1) as usize;
    let height = (y1 - y0 + 1) as usize;
    let sq_index = |q: (i64, i64)| ((q.1 - y0) as usize) * width + ((q.0 - x0) as usize);
    // Component id per traversed unit square, indexed by the square's
    // lower-left corner; squares live at x0..x1, y0..y1.
    let mut square_component: Vec<Option<u16>> = vec![None; width * height];

    let mut even_points: Vec<(i64, i64)> = Vec::new();
    for y in y0..=y1 {
        for x in x0..=x1 {
            if (x + y).rem_euclid(2) == 0 && patch.contains((x, y)) {
                even_points.push((x, y));
            }
        }
    }

    let mut paths: Vec<Vec<(i64, i64)>> = Vec::new();
    let mut closed: Vec<bool> = Vec::new();
    let mut endpoints: Vec<(i64, i64)> = Vec::new();

    // The unit square a step from p along d passes through.
    let step_square = |p: (i64, i64), d: (i64, i64)| {
        (
            p.0 + if d.0 == 1 { 0 } else { -1 },
            p.1 + if d.1 == 1 { 0 } else { -1 },
        )
    };

    let walk = |start: Point,
                    dir: Point,
                    component: u16,
                    square_component: &mut Vec<Option<u16>>|
     -> Result<(Vec<Point>, Option<Point>), TraceError> {
        let mut path = vec![start];
        let mut pos = start;
        let mut d = dir;
        loop {
            let sq = step_square(pos, d);
            let slot = &mut square_component[sq_index(sq)];
            if slot.is_some() {
                return Err(TraceError::Inconsistent {
                    at: pos,
                    what: "segment visited twice",
                });
            }
            *slot = Some(component);
            pos = (pos.0 + d.0, pos.1 + d.1);
            path.push(pos);
            let mask = square_mask(patch, pos);
            match classify(mask) {
                PointKind::Interior => {}
                PointKind::HorizontalEdge => d = (d.0, -d.1),
                PointKind::VerticalEdge => d = (-d.0, d.1),
                PointKind::ConvexCorner => return Ok((path, None)),
                PointKind::ConcaveCorner => return Err(TraceError::ConcaveViolation(pos)),
                PointKind::Outside => {
                    return Err(TraceError::Inconsistent {
                        at: pos,
                        what: "walk left the region",
                    })
                }
            }
            if (pos, d) == (start, dir) {
                path.pop();
                return Ok((path, Some(start)));
            }
        }
    };

    // Arcs start at convex corners of even sum.
    for &p in &even_points {
        let mask = square_mask(patch, p);
        if classify(mask) != PointKind::ConvexCorner {
            continue;
        }
        let d = corner_direction(mask);
        if square_component[sq_index(step_square(p, d))].is_some() {
            continue;
        }
        let component = paths.len() as u16;
        let (path, cycle) = walk(p, d, component, &mut square_component)?;
        if cycle.is_some() {
            return Err(TraceError::Inconsistent {
                at: p,
                what: "walk from a corner came back around",
            });
        }
        endpoints.push(*path.first().unwrap());
        endpoints.push(*path.last().unwrap());
        paths.push(path);
        closed.push(false);
    }
    let arcs = paths.len();

    // Remaining segments belong to circles.
    for &p in &even_points {
        for d in [(1, 1), (1, -1)] {
            let sq = step_square(p, d);
            if sq.0 < x0 || sq.1 < y0 || sq.0 >= x1 || sq.1 >= y1 {
                continue;
            }
            let occupied = square_mask(patch, p) & if d == (1, 1) { 1 } else { 8 } != 0;
            if !occupied || square_component[sq_index(sq)].is_some() {
                continue;
            }
            let component = paths.len() as u16;
            let (mut path, cycle) = walk(p, d, component, &mut square_component)?;
            if cycle.is_none() {
                return Err(TraceError::Inconsistent {
                    at: p,
                    what: "mid-curve walk reached a corner",
                });
            }
            path.pop();
            paths.push(path);
            closed.push(true);
        }
    }
    let circles = paths.len() - arcs;

    // Every interior even point is one crossing; its two passages run along
    // the two diagonal families through it.
    let mut crossings = Vec::new();
    let mut intersections = vec![vec![0usize; paths.len()]; paths.len()];
    for &p in &even_points {
        if classify(square_mask(patch, p)) != PointKind::Interior {
            continue;
        }
        crossings.push(p);
        let up = square_component[sq_index(p)].ok_or(TraceError::Inconsistent {
            at: p,
            what: "untraced rising passage",
        })? as usize;
        let down = square_component[sq_index((p.0, p.1 - 1))].ok_or(TraceError::Inconsistent {
            at: p,
            what: "untraced falling passage",
        })? as usize;
        intersections[up][down] += 1;
        if up != down {
            intersections[down][up] += 1;
        }
    }

    Ok(TracedCurve {
        summary: DivideTrace {
            arcs,
            circles,
            endpoints,
            double_point_count: crossings.len(),
            intersections,
        },
        paths,
        closed,
        crossings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lshape::{LRegion, Rect};

    fn traced(a1: i64, a2: i64, b1: i64, b2: i64) -> DivideTrace {
        trace(&place(&LRegion::new(a1, a2, b1, b2).unwrap())).unwrap()
    }

    #[test]
    fn smallest_rectangle_is_a_hopf_link_divide() {
        let t = trace(&place_rect(&Rect::new(2, 2).unwrap())).unwrap();
        assert_eq!(t.arcs, 2);
        assert_eq!(t.circles, 0);
        assert_eq!(t.double_point_count, 1);
        assert_eq!(t.intersections, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn torus_rectangles_follow_the_gcd_rule() {
        for a in 2..7 {
            for b in 2..7 {
                let g = num_integer::gcd(a, b);
                let t = trace(&place_rect(&Rect::new(a, b).unwrap())).unwrap();
                let (arcs, circles) = if g % 2 == 1 {
                    (1, (g - 1) / 2)
                } else {
                    (2, (g - 2) / 2)
                };
                assert_eq!(t.arcs as i64, arcs, "{a} {b}");
                assert_eq!(t.circles as i64, circles, "{a} {b}");
                assert_eq!(t.arcs as i64 + 2 * t.circles as i64, g, "{a} {b}");
            }
        }
    }

    #[test]
    fn coprime_rectangles_are_single_arcs_with_torus_genus() {
        for a in 2..8 {
            for b in 2..8 {
                if num_integer::gcd(a, b) != 1 {
                    continue;
                }
                let t = trace(&place_rect(&Rect::new(a, b).unwrap())).unwrap();
                assert!(is_immersed_arc(&t), "{a} {b}");
                assert_eq!(t.double_point_count as i64, (a - 1) * (b - 1) / 2);
            }
        }
    }

    #[test]
    fn square_three_gives_arc_plus_circle() {
        let t = trace(&place_rect(&Rect::new(3, 3).unwrap())).unwrap();
        assert_eq!(t.arcs, 1);
        assert_eq!(t.circles, 1);
        assert_eq!(t.double_point_count, 2);
        // Both crossings are arc-circle crossings.
        assert_eq!(t.intersections, vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn pretzel_region_is_an_immersed_arc() {
        let t = traced(3, 5, 3, 4);
        assert_eq!(t.arcs, 1);
        assert_eq!(t.circles, 0);
        assert_eq!(t.double_point_count, 5);
        assert_eq!(t.endpoints.len(), 2);
        assert_eq!(t.intersections, vec![vec![5]]);
    }

    #[test]
    fn trace_agrees_with_double_point_formula() {
        for (a1, a2, b1, b2) in [(3, 5, 3, 4), (3, 5, 1, 2), (7, 9, 3, 4), (11, 13, 16, 17)] {
            let r = LRegion::new(a1, a2, b1, b2).unwrap();
            let t = trace(&place(&r)).unwrap();
            assert!(is_immersed_arc(&t), "{r}");
            assert_eq!(t.double_point_count as i64, r.double_points().unwrap(), "{r}");
        }
    }

    #[test]
    fn odd_numerator_region_traces_as_two_arcs() {
        let t = traced(2, 3, 1, 2);
        assert!(!is_immersed_arc(&t));
        assert_eq!(t.arcs, 2);
        assert_eq!(t.circles, 0);
        assert_eq!(t.double_point_count, 1);
        // Two arcs close up to the two link components of W(3) W(2).
        let link_components = t.arcs + 2 * t.circles;
        assert_eq!(link_components, 2);
    }

    #[test]
    fn curve_geometry_covers_every_square_once() {
        let r = LRegion::new(3, 5, 3, 4).unwrap();
        let segs = curve_geometry(&place(&r)).unwrap();
        assert_eq!(segs.len() as i64, r.area());
        for s in &segs {
            assert_eq!((s.from.0 + s.from.1) % 2, 0);
            assert_eq!((s.to.0 + s.to.1) % 2, 0);
            assert_eq!((s.from.0 - s.to.0).abs(), 1);
            assert_eq!((s.from.1 - s.to.1).abs(), 1);
        }
    }

    #[test]
    fn statistics_are_invariant_under_lattice_symmetries() {
        struct Transformed<'a> {
            inner: &'a PlacedRegion,
            map: fn((i64, i64)) -> (i64, i64),
            bbox: ((i64, i64), (i64, i64)),
        }
        impl LatticePatch for Transformed<'_> {
            fn contains(&self, p: (i64, i64)) -> bool {
                self.inner.contains((self.map)(p))
            }
            fn bbox(&self) -> ((i64, i64), (i64, i64)) {
                self.bbox
            }
        }
        let r = LRegion::new(3, 5, 3, 4).unwrap();
        let placed = place(&r);
        let base = trace(&placed).unwrap();
        let ((px0, py0), (px1, py1)) = PlacedRegion::bbox(&placed);
        // Preimages of the placed bbox under each map, with even translation
        // offsets so parity is preserved.
        type Case = (fn(Point) -> Point, (Point, Point));
        let cases: Vec<Case> = vec![
            (|(x, y)| (y, x), ((py0, px0), (py1, px1))),
            (|(x, y)| (20 - x, y), ((20 - px1, py0), (20 - px0, py1))),
            (|(x, y)| (y, 20 - x), ((20 - py1, px0), (20 - py0, px1))),
        ];
        for (map, bbox) in cases {
            let t = trace_patch(&Transformed {
                inner: &placed,
                map,
                bbox,
            })
            .unwrap();
            assert_eq!(t.summary.arcs, base.arcs);
            assert_eq!(t.summary.circles, base.circles);
            assert_eq!(t.summary.double_point_count, base.double_point_count);
            assert_eq!(t.summary.intersections, base.intersections);
        }
    }
}
