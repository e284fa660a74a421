//! The canonical multipath collections on the staircase network `Γ₀[n]`
//! and on `Γ₀[n] ∘ Δ₀[n]`, their linear weight maps and inverses, and the
//! signed cell and region functionals of the staircase.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::elimination::solve_square;
use crate::error::{Error, Result};
use crate::hive::Family;
use crate::multipath::{GammaDeltaPath, Multipath};
use crate::network::{gamma0, gamma0_slant_origin, gamma0_width, horn_network, truncate, EdgeId, PlanarNetwork, VertexId};
use crate::tableau::Tableau;
use crate::weight::{int, Rational, TropicalWeight};
use crate::weighting::Weighting;

/// `Γ₀[n]`, alone or followed by `Δ₀[n]`, with its edges labelled by
/// position.
#[derive(Debug, Clone)]
pub struct Staircase {
    n: usize,
    net: PlanarNetwork,
    horn: bool,
    /// horizontal segments of line `y` inside `Γ₀`, left to right
    lines: Vec<Vec<EdgeId>>,
    slants: BTreeMap<(usize, usize), EdgeId>,
    /// the line `j` edge of `Δ₀`
    delta_lines: Vec<EdgeId>,
}

impl Staircase {
    pub fn gamma0(n: usize) -> Result<Self> {
        Self::build(n, gamma0(n)?, false)
    }

    pub fn horn(n: usize) -> Result<Self> {
        Self::build(n, horn_network(n)?, true)
    }

    fn build(n: usize, net: PlanarNetwork, horn: bool) -> Result<Self> {
        let width = int(gamma0_width(n));
        let mut lines = vec![Vec::new(); n + 1];
        let mut delta_lines = vec![0; n + 1];
        let mut slants = BTreeMap::new();
        for e in net.edges() {
            let (t, h) = (net.vertex(e.tail), net.vertex(e.head));
            let y: usize = t.y().to_integer().try_into().expect("small height");
            if t.y() == h.y() {
                if *h.x() <= width {
                    lines[y].push(e.id);
                } else {
                    delta_lines[y] = e.id;
                }
            } else {
                let r = y - 1;
                let u = t.x().to_integer();
                let s = (1..=r).find(|&s| gamma0_slant_origin(n, r, s) == u.clone().try_into().expect("small"));
                slants.insert((r, s.expect("slant position")), e.id);
            }
        }
        for line in &mut lines {
            line.sort_by(|a, b| net.vertex(net.edge(*a).tail).x().cmp(net.vertex(net.edge(*b).tail).x()));
        }
        Ok(Staircase { n, net, horn, lines, slants, delta_lines })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn network(&self) -> &PlanarNetwork {
        &self.net
    }

    pub fn is_horn(&self) -> bool {
        self.horn
    }

    /// The slant `a_{r,s}` from line `r+1` down to line `r`.
    pub fn slant(&self, r: usize, s: usize) -> EdgeId {
        self.slants[&(r, s)]
    }

    /// Horizontal segments of line `y` in the staircase part.
    pub fn line(&self, y: usize) -> &[EdgeId] {
        &self.lines[y]
    }

    /// `Δ₀` edge on line `j`; only for the concatenated network.
    pub fn delta_line(&self, j: usize) -> Option<EdgeId> {
        self.horn.then(|| self.delta_lines[j])
    }

    /// The whole horizontal line `τ(j)`.
    pub fn tau(&self, j: usize) -> Vec<EdgeId> {
        let mut p = self.lines[j].clone();
        p.extend(self.delta_line(j));
        p
    }

    fn source(&self, y: usize) -> VertexId {
        self.net.sources()[y - 1]
    }

    /// Walks right from the source at height `start`, taking the listed
    /// slants in order and horizontal segments otherwise, until the end of
    /// the staircase part.
    fn walk(&self, start: usize, slants: &[EdgeId]) -> Vec<EdgeId> {
        let width = int(gamma0_width(self.n));
        let mut v = self.source(start);
        let mut next = slants.iter().peekable();
        let mut path = Vec::new();
        while *self.net.vertex(v).x() < width {
            let e = match next.peek() {
                Some(&&s) if self.net.edge(s).tail == v => {
                    next.next();
                    s
                }
                _ => {
                    let y = self.net.vertex(v).y();
                    self.net
                        .out_edges(v)
                        .find(|e| self.net.vertex(e.head).y() == y)
                        .expect("every staircase vertex continues horizontally")
                        .id
                }
            };
            path.push(e);
            v = self.net.edge(e).head;
        }
        debug_assert!(next.next().is_none(), "walk skipped a slant");
        path
    }

    /// `α(k, i)`: its j-th path starts at height `k-j+1`, takes the slants
    /// `a_{r, i-j+1}` for `r = k-j` down to `i-j+1`, and ends at height
    /// `i-j+1`.
    pub fn alpha(&self, k: usize, i: usize) -> Vec<Vec<EdgeId>> {
        (1..=i)
            .map(|j| {
                let s = i - j + 1;
                let slants: Vec<EdgeId> = (s..=k - j).rev().map(|r| self.slant(r, s)).collect();
                self.walk(k - j + 1, &slants)
            })
            .collect()
    }

    /// `β(k, i)`: `α(n-i, k-i)` together with the top `i` full lines.
    /// Returned as (left paths, right paths).
    pub fn beta(&self, k: usize, i: usize) -> (Vec<Vec<EdgeId>>, Vec<Vec<EdgeId>>) {
        let mut left = self.alpha(self.n - i, k - i);
        let mut right = Vec::new();
        for j in self.n - i + 1..=self.n {
            left.push(self.lines[j].clone());
            right.push(vec![self.delta_lines[j]]);
        }
        (left, right)
    }

    /// Signed boundary edges of a cell, traversed clockwise: `+1` where the
    /// traversal follows the edge, `-1` where it opposes it.
    pub fn cell_edges(&self, cell: Cell) -> Result<Vec<(EdgeId, i8)>> {
        let n = self.n;
        match cell {
            Cell::Gamma { k: 0, i: 0 } => Ok(self.lines[1].iter().map(|&e| (e, 1)).collect()),
            Cell::Gamma { k, i } if k >= 1 && k < n && i <= k => {
                let w = gamma0_width(n);
                let top_lo = if i == 0 { 0 } else { gamma0_slant_origin(n, k, i) };
                let top_hi = if i == k { w } else { gamma0_slant_origin(n, k, i + 1) };
                let bot_lo = if i == 0 { 0 } else { gamma0_slant_origin(n, k, i) + 1 };
                let bot_hi = if i == k { w } else { gamma0_slant_origin(n, k, i + 1) + 1 };
                let mut out = Vec::new();
                out.extend(self.segments_between(k + 1, top_lo, top_hi).into_iter().map(|e| (e, 1)));
                out.extend(self.segments_between(k, bot_lo, bot_hi).into_iter().map(|e| (e, -1)));
                if i >= 1 {
                    out.push((self.slant(k, i), -1));
                }
                if i < k {
                    out.push((self.slant(k, i + 1), 1));
                }
                Ok(out)
            }
            Cell::Delta { j } if self.horn && j <= n => {
                let mut out = Vec::new();
                if j < n {
                    out.push((self.delta_lines[j + 1], 1));
                }
                if j >= 1 {
                    out.push((self.delta_lines[j], -1));
                }
                Ok(out)
            }
            Cell::Gamma { k, i } => Err(Error::UnknownCell { k, i }),
            Cell::Delta { j } => Err(Error::UnknownCell { k: j, i: j + 1 }),
        }
    }

    fn segments_between(&self, y: usize, lo: i64, hi: i64) -> Vec<EdgeId> {
        let (lo, hi) = (int(lo), int(hi));
        self.lines[y]
            .iter()
            .copied()
            .filter(|&e| {
                let e = self.net.edge(e);
                *self.net.vertex(e.tail).x() >= lo && *self.net.vertex(e.head).x() <= hi
            })
            .collect()
    }

    /// `c_{[k,i]}`: the clockwise signed boundary sum of a cell.
    pub fn cell_functional(&self, cell: Cell, w: &Weighting) -> Result<Rational> {
        let mut total = Rational::zero();
        for (e, sign) in self.cell_edges(cell)? {
            let x = w.get(e).finite().ok_or(Error::NonFiniteEntry { k: cell.row(), i: cell.column() })?;
            if sign > 0 {
                total += x;
            } else {
                total -= x;
            }
        }
        Ok(total)
    }

    /// The cells summed by a region functional.
    pub fn region_cells(&self, kind: Region, k: usize, i: usize) -> Result<Vec<Cell>> {
        let n = self.n;
        let err = Error::UnknownRegion { k, i };
        if i > k || k >= n {
            return Err(err);
        }
        Ok(match kind {
            Region::NorthEast => (0..=i).map(|d| Cell::Gamma { k: k - d, i: i - d }).collect(),
            Region::SouthEast => (i..=k).rev().map(|r| Cell::Gamma { k: r, i }).collect(),
            Region::East => {
                if !self.horn {
                    return Err(err);
                }
                let mut cells: Vec<Cell> = (i..=k).map(|c| Cell::Gamma { k, i: c }).collect();
                cells.push(Cell::Delta { j: k });
                cells
            }
        })
    }

    /// `r↗`, `r↘` or `r→` at `[k, i]`.
    pub fn region_functional(&self, kind: Region, k: usize, i: usize, w: &Weighting) -> Result<Rational> {
        let mut total = Rational::zero();
        for c in self.region_cells(kind, k, i)? {
            total += self.cell_functional(c, w)?;
        }
        Ok(total)
    }
}

/// A connected component of the complement of the staircase: `[k, i]`
/// between lines `k` and `k+1` of `Γ₀` (`[0, 0]` below line 1), or
/// `[j, j+1]` between lines `j` and `j+1` of `Δ₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Gamma { k: usize, i: usize },
    Delta { j: usize },
}

impl Cell {
    fn row(&self) -> usize {
        match *self {
            Cell::Gamma { k, .. } => k,
            Cell::Delta { j } => j,
        }
    }

    fn column(&self) -> usize {
        match *self {
            Cell::Gamma { i, .. } => i,
            Cell::Delta { j } => j + 1,
        }
    }
}

/// Shapes of region functionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    /// `r↗_{[k,i]} = c_{[k,i]} + c_{[k-1,i-1]} + … + c_{[k-i,0]}`
    NorthEast,
    /// `r↘_{[k,i]} = c_{[k,i]} + c_{[k-1,i]} + … + c_{[i,i]}`
    SouthEast,
    /// `r→_{[k,i]} = c_{[k,i]} + c_{[k,i+1]} + … + c_{[k,k]} + c_{[k,k+1]}`
    East,
}

/// `c_{[k,i]}` on a network that must be `Γ₀[n]` or `Γ₀[n] ∘ Δ₀[n]`.
pub fn cell_functional(net: &PlanarNetwork, cell: Cell, w: &Weighting) -> Result<Rational> {
    staircase_for(net)?.cell_functional(cell, w)
}

pub fn region_functional(net: &PlanarNetwork, kind: Region, k: usize, i: usize, w: &Weighting) -> Result<Rational> {
    staircase_for(net)?.region_functional(kind, k, i, w)
}

fn staircase_for(net: &PlanarNetwork) -> Result<Staircase> {
    let n = net.rank().ok_or(Error::RankMissing)?;
    let s = if net.middle().is_some() { Staircase::horn(n)? } else { Staircase::gamma0(n)? };
    if s.net == *net {
        Ok(s)
    } else {
        Err(Error::TypeMismatch(format!("network is not the staircase of rank {n}")))
    }
}

/// The region functional equal to a rhombus combination on a collection.
///
/// For a family at `(k, i)` the combination `lhs - rhs` of the member
/// weights equals `sign * region[K, I]` identically in the weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionIdentity {
    pub region: Region,
    pub sign: i8,
    pub k: usize,
    pub i: usize,
}

/// On collection `A` the first family at `(k, i)` is `r↗_{[k,i-1]}` and
/// the second is `-r↘_{[k,i]}`. On collection `B` of rank `n` the first
/// is `-r↘_{[n-i,k-i+1]}`, the second `r→_{[n-i,k-i+1]}` and the third
/// `r↗_{[n-i,k-i]}`. Returns `None` for the third family on `A`.
pub fn region_identity(kind: CollectionKind, n: usize, family: Family, k: usize, i: usize) -> Option<RegionIdentity> {
    let id = |region, sign, k, i| Some(RegionIdentity { region, sign, k, i });
    match (kind, family) {
        (CollectionKind::Gz, Family::First) => id(Region::NorthEast, 1, k, i - 1),
        (CollectionKind::Gz, Family::Second) => id(Region::SouthEast, -1, k, i),
        (CollectionKind::Gz, Family::Third) => None,
        (CollectionKind::Horn, Family::First) => id(Region::SouthEast, -1, n - i, k - i + 1),
        (CollectionKind::Horn, Family::Second) => id(Region::East, 1, n - i, k - i + 1),
        (CollectionKind::Horn, Family::Third) => id(Region::NorthEast, 1, n - i, k - i),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CollectionKind {
    Gz,
    Horn,
}

/// The edges whose weights parametrize the collection maps; every other
/// edge is weighted zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeEdgeLabels {
    /// `h_k`: the last segment of line `k` before the end of `Γ₀`
    pub h: BTreeMap<usize, EdgeId>,
    /// `a_{r,s}`: the slants
    pub a: BTreeMap<(usize, usize), EdgeId>,
    /// `d_j`: the lines of `Δ₀`
    pub d: BTreeMap<usize, EdgeId>,
    pub zero_edges: BTreeSet<EdgeId>,
}

/// Position of a free variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    H(usize),
    A(usize, usize),
    D(usize),
}

impl FreeEdgeLabels {
    pub fn edge(&self, l: Label) -> EdgeId {
        match l {
            Label::H(k) => self.h[&k],
            Label::A(r, s) => self.a[&(r, s)],
            Label::D(j) => self.d[&j],
        }
    }

    /// Free variables in the order used by the inversions: the `Δ₀` lines
    /// from the top, then for each `k`, `h_k` followed by `a_{k-1,1..k-1}`.
    pub fn ordered(&self, n: usize) -> Vec<Label> {
        let mut out: Vec<Label> = (1..=n).rev().filter(|j| self.d.contains_key(j)).map(Label::D).collect();
        for k in 1..=n {
            out.push(Label::H(k));
            out.extend((1..k).map(|i| Label::A(k - 1, i)));
        }
        out
    }
}

/// `A = {α(k,i)}` on `Γ₀[n]` or `B = {β(k,i)}` on `Γ₀[n] ∘ Δ₀[n]`.
#[derive(Debug, Clone)]
pub struct Collection {
    kind: CollectionKind,
    stair: Staircase,
    members: BTreeMap<(usize, usize), (Vec<Vec<EdgeId>>, Vec<Vec<EdgeId>>)>,
    labels: FreeEdgeLabels,
}

fn labels_of(stair: &Staircase) -> FreeEdgeLabels {
    let n = stair.n;
    let h: BTreeMap<usize, EdgeId> = (1..=n).map(|k| (k, *stair.lines[k].last().expect("nonempty line"))).collect();
    let a = stair.slants.clone();
    let d: BTreeMap<usize, EdgeId> =
        if stair.horn { (1..=n).map(|j| (j, stair.delta_lines[j])).collect() } else { BTreeMap::new() };
    let used: BTreeSet<EdgeId> = h.values().chain(a.values()).chain(d.values()).copied().collect();
    let zero_edges = stair.net.edge_ids().filter(|e| !used.contains(e)).collect();
    FreeEdgeLabels { h, a, d, zero_edges }
}

/// The collection `A` of multipaths `α(k,i) ∈ P_i Γ₀^{(k)}`, `0 < i <= k <= n`.
pub fn collection_a(n: usize) -> Result<Collection> {
    let stair = Staircase::gamma0(n)?;
    let mut members = BTreeMap::new();
    for k in 1..=n {
        let sub = truncate(&stair.net, k)?;
        for i in 1..=k {
            let paths = stair.alpha(k, i);
            let mp = Multipath::new(&sub, paths.clone())?;
            let expect_src: Vec<usize> = (k - i + 1..=k).rev().collect();
            let expect_snk: Vec<usize> = (1..=i).collect();
            let heights = |vs: Vec<VertexId>| -> Vec<usize> {
                vs.into_iter().map(|v| sub.vertex(v).y().to_integer().try_into().expect("small")).collect()
            };
            if heights(mp.sources(&sub)) != expect_src || heights(mp.sinks(&sub)) != expect_snk {
                return Err(Error::InvalidMultipath(format!("alpha({k},{i}) has the wrong type")));
            }
            members.insert((k, i), (paths, Vec::new()));
        }
    }
    let labels = labels_of(&stair);
    Ok(Collection { kind: CollectionKind::Gz, stair, members, labels })
}

/// The collection `B` of pairs `β(k,i)`, `0 <= i <= k <= n`.
pub fn collection_b(n: usize) -> Result<Collection> {
    let stair = Staircase::horn(n)?;
    let mut members = BTreeMap::new();
    for k in 0..=n {
        for i in 0..=k {
            let (left, right) = stair.beta(k, i);
            GammaDeltaPath::new(&stair.net, left.clone(), right.clone())?;
            members.insert((k, i), (left, right));
        }
    }
    let labels = labels_of(&stair);
    Ok(Collection { kind: CollectionKind::Horn, stair, members, labels })
}

impl Collection {
    pub fn n(&self) -> usize {
        self.stair.n
    }

    pub fn kind(&self) -> CollectionKind {
        self.kind
    }

    pub fn network(&self) -> &PlanarNetwork {
        &self.stair.net
    }

    pub fn staircase(&self) -> &Staircase {
        &self.stair
    }

    pub fn labels(&self) -> &FreeEdgeLabels {
        &self.labels
    }

    /// Indices carrying a member.
    pub fn indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.members.keys().copied()
    }

    pub fn member_edges(&self, k: usize, i: usize) -> BTreeSet<EdgeId> {
        let (l, r) = &self.members[&(k, i)];
        l.iter().chain(r).flatten().copied().collect()
    }

    /// `α(k,i)` as a multipath of `Γ₀` (collection A only).
    pub fn multipath(&self, k: usize, i: usize) -> Option<Multipath> {
        if self.kind != CollectionKind::Gz {
            return None;
        }
        let (l, _) = self.members.get(&(k, i))?;
        Multipath::new(&self.stair.net, l.clone()).ok()
    }

    /// `β(k,i)` as a composable pair (collection B only).
    pub fn gd_path(&self, k: usize, i: usize) -> Option<GammaDeltaPath> {
        if self.kind != CollectionKind::Horn {
            return None;
        }
        let (l, r) = self.members.get(&(k, i))?;
        GammaDeltaPath::new(&self.stair.net, l.clone(), r.clone()).ok()
    }

    /// Free labels appearing in a member, with multiplicity one each.
    fn member_labels(&self, k: usize, i: usize) -> Vec<Label> {
        let edges = self.member_edges(k, i);
        self.labels.ordered(self.n()).into_iter().filter(|l| edges.contains(&self.labels.edge(*l))).collect()
    }

    /// Tableau positions filled by members, in the order matching
    /// [`FreeEdgeLabels::ordered`].
    fn equations(&self) -> Vec<(usize, usize)> {
        self.members.keys().copied().filter(|&(k, _)| k > 0).collect()
    }
}

/// `t^k_i = w(member(k,i))`, with zero where no member is defined.
pub fn w_collection(c: &Collection, w: &Weighting) -> Tableau<TropicalWeight> {
    Tableau::from_fn(c.n(), |k, i| match c.members.get(&(k, i)) {
        Some(_) => w.total(&c.member_edges(k, i)),
        None => TropicalWeight::zero(),
    })
}

fn finite_entries(t: &Tableau<TropicalWeight>) -> Result<Tableau<Rational>> {
    t.to_finite().map_err(|(k, i)| Error::NonFiniteEntry { k, i })
}

fn weighting_from(c: &Collection, values: &BTreeMap<Label, Rational>) -> Weighting {
    let mut w = Weighting::zero(c.network());
    for (l, v) in values {
        w.set(c.labels.edge(*l), TropicalWeight::Finite(v.clone()));
    }
    w
}

/// Solves `w_A(w) = t` by back-substitution: `h_k` from `α(k,k)` and
/// `a_{k-1,i}` from `α(k,i)`, row by row.
pub fn invert_gz(t: &Tableau<TropicalWeight>) -> Result<Weighting> {
    let t = finite_entries(t)?;
    for k in 0..=t.n() {
        if !t[(k, 0)].is_zero() {
            return Err(Error::NonZeroFirstColumn { k });
        }
    }
    let c = collection_a(t.n().max(1))?;
    if t.n() == 0 {
        return Ok(Weighting::zero(c.network()));
    }
    let mut values: BTreeMap<Label, Rational> = BTreeMap::new();
    for k in 1..=t.n() {
        let mut rows: Vec<(usize, Label)> = vec![(k, Label::H(k))];
        rows.extend((1..k).map(|i| (i, Label::A(k - 1, i))));
        for (i, pivot) in rows {
            let mut rest = Rational::zero();
            for l in c.member_labels(k, i) {
                if l != pivot {
                    rest += values.get(&l).expect("earlier labels are solved first");
                }
            }
            values.insert(pivot, &t[(k, i)] - rest);
        }
    }
    Ok(weighting_from(&c, &values))
}

/// Solves `w_B(w) = t` as one square linear system.
pub fn invert_horn(t: &Tableau<TropicalWeight>) -> Result<Weighting> {
    let t = finite_entries(t)?;
    if !t[(0, 0)].is_zero() {
        return Err(Error::NonZeroFirstColumn { k: 0 });
    }
    let n = t.n();
    if n == 0 {
        return Err(Error::NOutOfRange(0));
    }
    let c = collection_b(n)?;
    let vars = c.labels.ordered(n);
    let col: BTreeMap<Label, usize> = vars.iter().enumerate().map(|(j, l)| (*l, j)).collect();
    let eqs = c.equations();
    debug_assert_eq!(eqs.len(), vars.len());
    let mut a = vec![vec![Rational::zero(); vars.len()]; eqs.len()];
    let mut b = Vec::with_capacity(eqs.len());
    for (row, &(k, i)) in eqs.iter().enumerate() {
        for l in c.member_labels(k, i) {
            a[row][col[&l]] = int(1);
        }
        b.push(t[(k, i)].clone());
    }
    let x = solve_square(a, b).ok_or(Error::SingularSystem)?;
    let values = vars.into_iter().zip(x).collect();
    Ok(weighting_from(&c, &values))
}
