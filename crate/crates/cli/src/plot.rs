//! Marching-squares contours of the real affine loci, written as SVG.
//!
//! This is the only floating-point code in the workspace. Component counts
//! are approximate: they count connected pieces of the traced contour
//! inside the viewport at the chosen grid resolution.

use std::fmt::Write as _;

pub const DEFAULT_RESOLUTION: usize = 256;
pub const MIN_RESOLUTION: usize = 16;
const CANVAS: f64 = 600.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Curve {
    /// `s(xy − r²) = xy(x + y)`.
    Cubic { s: f64, r2: f64 },
    /// `σ(x²y² + xy + ρ²(x² + xy + y² − 1)) = (1 + ρ²)xy(x + y)`.
    Quartic { sigma: f64, rho2: f64 },
}

impl Curve {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let xy = x * y;
        match *self {
            Curve::Cubic { s, r2 } => s * (xy - r2) - xy * (x + y),
            Curve::Quartic { sigma, rho2 } => {
                sigma * (xy * xy + xy + rho2 * (x * x + xy + y * y - 1.0)) - (1.0 + rho2) * xy * (x + y)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Curve::Cubic { .. } => "cubic",
            Curve::Quartic { .. } => "quartic",
        }
    }

    pub fn default_viewport(&self) -> Viewport {
        match self {
            Curve::Cubic { .. } => Viewport::square(10.0),
            Curve::Quartic { .. } => Viewport::square(3.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Viewport {
    /// `(−h, h)²`.
    pub fn square(h: f64) -> Self {
        Viewport { xmin: -h, xmax: h, ymin: -h, ymax: h }
    }

    pub fn is_nonempty(&self) -> bool {
        self.xmin < self.xmax && self.ymin < self.ymax
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.xmin, self.xmax, self.ymin, self.ymax]
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotSpec {
    pub curve: Curve,
    pub viewport: Viewport,
    pub resolution: usize,
}

impl PlotSpec {
    pub fn new(curve: Curve, viewport: Viewport, resolution: usize) -> Result<Self, String> {
        if resolution < MIN_RESOLUTION {
            return Err(format!("resolution must be at least {MIN_RESOLUTION}"));
        }
        if !viewport.is_nonempty() {
            return Err("viewport is empty".into());
        }
        Ok(PlotSpec { curve, viewport, resolution })
    }

    pub fn with_defaults(curve: Curve) -> Self {
        PlotSpec { curve, viewport: curve.default_viewport(), resolution: DEFAULT_RESOLUTION }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Contour {
    pub polylines: Vec<Vec<(f64, f64)>>,
    pub components: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct Grid {
    spec: PlotSpec,
    values: Vec<f64>,
}

impl Grid {
    fn new(spec: PlotSpec) -> Self {
        let n = spec.resolution;
        let mut values = Vec::with_capacity((n + 1) * (n + 1));
        for j in 0..=n {
            for i in 0..=n {
                let (x, y) = Self::node(&spec, i, j);
                values.push(spec.curve.eval(x, y));
            }
        }
        Grid { spec, values }
    }

    fn node(spec: &PlotSpec, i: usize, j: usize) -> (f64, f64) {
        let v = &spec.viewport;
        let n = spec.resolution as f64;
        (v.xmin + (v.xmax - v.xmin) * i as f64 / n, v.ymin + (v.ymax - v.ymin) * j as f64 / n)
    }

    fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * (self.spec.resolution + 1) + i]
    }

    fn positive(&self, i: usize, j: usize) -> bool {
        self.value(i, j) > 0.0
    }

    fn horizontal(&self, i: usize, j: usize) -> usize {
        j * self.spec.resolution + i
    }

    fn vertical(&self, i: usize, j: usize) -> usize {
        let n = self.spec.resolution;
        n * (n + 1) + j * (n + 1) + i
    }

    fn edge_count(&self) -> usize {
        2 * self.spec.resolution * (self.spec.resolution + 1)
    }

    /// Endpoints of an edge id, as grid nodes.
    fn edge_nodes(&self, e: usize) -> ((usize, usize), (usize, usize)) {
        let n = self.spec.resolution;
        if e < n * (n + 1) {
            let (j, i) = (e / n, e % n);
            ((i, j), (i + 1, j))
        } else {
            let e = e - n * (n + 1);
            let (j, i) = (e / (n + 1), e % (n + 1));
            ((i, j), (i, j + 1))
        }
    }

    fn crossing(&self, e: usize) -> (f64, f64) {
        let (a, b) = self.edge_nodes(e);
        let (va, vb) = (self.value(a.0, a.1), self.value(b.0, b.1));
        let t = if va == vb { 0.5 } else { (va / (va - vb)).clamp(0.0, 1.0) };
        let (pa, pb) = (Self::node(&self.spec, a.0, a.1), Self::node(&self.spec, b.0, b.1));
        (pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1))
    }

    /// Segments of the contour, as pairs of crossed edge ids.
    fn segments(&self) -> Vec<(usize, usize)> {
        let n = self.spec.resolution;
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                let c = [
                    self.positive(i, j),
                    self.positive(i + 1, j),
                    self.positive(i + 1, j + 1),
                    self.positive(i, j + 1),
                ];
                let bottom = self.horizontal(i, j);
                let right = self.vertical(i + 1, j);
                let top = self.horizontal(i, j + 1);
                let left = self.vertical(i, j);
                let edges = [
                    (bottom, c[0] != c[1]),
                    (right, c[1] != c[2]),
                    (top, c[2] != c[3]),
                    (left, c[3] != c[0]),
                ];
                let crossed: Vec<usize> = edges.iter().filter(|e| e.1).map(|e| e.0).collect();
                match crossed.len() {
                    2 => out.push((crossed[0], crossed[1])),
                    4 => {
                        let center = (self.value(i, j)
                            + self.value(i + 1, j)
                            + self.value(i + 1, j + 1)
                            + self.value(i, j + 1))
                            / 4.0;
                        if (center > 0.0) == c[0] {
                            out.push((bottom, right));
                            out.push((top, left));
                        } else {
                            out.push((left, bottom));
                            out.push((right, top));
                        }
                    }
                    _ => {}
                }
            }
        }
        out
    }
}

/// Traces the contour and counts its connected pieces.
pub fn trace(spec: &PlotSpec) -> Contour {
    let grid = Grid::new(*spec);
    let segments = grid.segments();
    let mut uf = UnionFind::new(grid.edge_count());
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); grid.edge_count()];
    for &(a, b) in &segments {
        uf.union(a, b);
        adjacent[a].push(b);
        adjacent[b].push(a);
    }
    let used: Vec<usize> = (0..grid.edge_count()).filter(|&e| !adjacent[e].is_empty()).collect();
    let mut roots: Vec<usize> = used.iter().map(|&e| uf.find(e)).collect();
    roots.sort_unstable();
    roots.dedup();

    let mut visited = vec![false; grid.edge_count()];
    let mut polylines = Vec::new();
    // open paths first, then closed loops
    let starts = used.iter().filter(|&&e| adjacent[e].len() == 1).chain(used.iter());
    for &start in starts {
        if visited[start] {
            continue;
        }
        let mut line = vec![grid.crossing(start)];
        visited[start] = true;
        let mut cur = start;
        while let Some(&next) = adjacent[cur].iter().find(|&&e| !visited[e]) {
            visited[next] = true;
            line.push(grid.crossing(next));
            cur = next;
        }
        if adjacent[cur].contains(&start) && line.len() > 2 {
            line.push(line[0]);
        }
        polylines.push(line);
    }
    Contour { polylines, components: roots.len() }
}

/// An SVG 1.1 document with one polyline per traced path.
pub fn render_svg(spec: &PlotSpec, contour: &Contour) -> String {
    let v = &spec.viewport;
    let (w, h) = (v.xmax - v.xmin, v.ymax - v.ymin);
    let (width, height) = if w >= h { (CANVAS, CANVAS * h / w) } else { (CANVAS * w / h, CANVAS) };
    let px = |x: f64| (x - v.xmin) / w * width;
    let py = |y: f64| (v.ymax - y) / h * height;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.3}\" height=\"{height:.3}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
    );
    let _ = writeln!(svg, "<title>{} locus, {} components</title>", spec.curve.name(), contour.components);
    let _ =
        writeln!(svg, "<rect x=\"0\" y=\"0\" width=\"{width:.3}\" height=\"{height:.3}\" fill=\"white\"/>");
    if v.xmin < 0.0 && v.xmax > 0.0 {
        let _ = writeln!(svg, "<line x1=\"{0:.3}\" y1=\"0\" x2=\"{0:.3}\" y2=\"{height:.3}\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>", px(0.0));
    }
    if v.ymin < 0.0 && v.ymax > 0.0 {
        let _ = writeln!(svg, "<line x1=\"0\" y1=\"{0:.3}\" x2=\"{width:.3}\" y2=\"{0:.3}\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>", py(0.0));
    }
    for line in &contour.polylines {
        svg.push_str("<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"");
        for (k, &(x, y)) in line.iter().enumerate() {
            if k > 0 {
                svg.push(' ');
            }
            let _ = write!(svg, "{:.3},{:.3}", px(x), py(y));
        }
        svg.push_str("\"/>\n");
    }
    svg.push_str("</svg>\n");
    svg
}
