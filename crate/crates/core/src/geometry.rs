//! Exact segment predicates for validating strip embeddings.

use core::cmp::Ordering;

use num_traits::Zero;

use crate::network::{Point, VertexId};
use crate::weight::Rational;

/// A straight piece of an embedded edge. Endpoints that are network
/// vertices carry their id; bend points carry `None`.
#[derive(Debug, Clone)]
pub(crate) struct Segment<'a> {
    pub p: &'a Point,
    pub q: &'a Point,
    pub p_vertex: Option<VertexId>,
    pub q_vertex: Option<VertexId>,
}

fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    det.cmp(&Rational::zero())
}

fn between(lo: &Rational, v: &Rational, hi: &Rational) -> bool {
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    lo <= v && v <= hi
}

/// Whether collinear point `c` lies on the closed segment `ab`.
fn on_segment(a: &Point, b: &Point, c: &Point) -> bool {
    between(&a.x, &c.x, &b.x) && between(&a.y, &c.y, &b.y)
}

impl Segment<'_> {
    fn vertex_at(&self, pt: &Point) -> Option<VertexId> {
        if self.p == pt {
            self.p_vertex
        } else if self.q == pt {
            self.q_vertex
        } else {
            None
        }
    }

    /// True when the two segments meet anywhere other than at a common
    /// network vertex.
    pub fn conflicts_with(&self, other: &Segment<'_>) -> bool {
        let o1 = orient(self.p, self.q, other.p);
        let o2 = orient(self.p, self.q, other.q);
        let o3 = orient(other.p, other.q, self.p);
        let o4 = orient(other.p, other.q, self.q);

        if o1 == Ordering::Equal && o2 == Ordering::Equal {
            // collinear: compare x-extents (segments are never vertical)
            let (s0, s1) = minmax(&self.p.x, &self.q.x);
            let (t0, t1) = minmax(&other.p.x, &other.q.x);
            let lo = if s0 >= t0 { s0 } else { t0 };
            let hi = if s1 <= t1 { s1 } else { t1 };
            return match lo.cmp(hi) {
                Ordering::Greater => false,
                Ordering::Less => true,
                Ordering::Equal => {
                    let pt = if self.p.x == *lo { self.p } else { self.q };
                    !self.shares_vertex(other, pt)
                }
            };
        }

        if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
            && o3 != Ordering::Equal && o4 != Ordering::Equal
        {
            return true;
        }

        // touching configurations: one endpoint lies on the other segment
        let touches = [
            (o1 == Ordering::Equal && on_segment(self.p, self.q, other.p)).then_some(other.p),
            (o2 == Ordering::Equal && on_segment(self.p, self.q, other.q)).then_some(other.q),
            (o3 == Ordering::Equal && on_segment(other.p, other.q, self.p)).then_some(self.p),
            (o4 == Ordering::Equal && on_segment(other.p, other.q, self.q)).then_some(self.q),
        ];
        touches.into_iter().flatten().any(|pt| !self.shares_vertex(other, pt))
    }

    fn shares_vertex(&self, other: &Segment<'_>, pt: &Point) -> bool {
        match (self.vertex_at(pt), other.vertex_at(pt)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    /// Whether `pt` lies strictly inside this segment (not at an endpoint).
    pub fn contains_interior(&self, pt: &Point) -> bool {
        pt != self.p
            && pt != self.q
            && orient(self.p, self.q, pt) == Ordering::Equal
            && on_segment(self.p, self.q, pt)
    }
}

fn minmax<'a>(a: &'a Rational, b: &'a Rational) -> (&'a Rational, &'a Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Height of the segment `pq` at abscissa `x` (requires `p.x != q.x`).
pub(crate) fn height_at(p: &Point, q: &Point, x: &Rational) -> Rational {
    let t = (x - &p.x) / (&q.x - &p.x);
    &p.y + t * (&q.y - &p.y)
}
