//! Meander graphs of composition pairs and the seaweed index.
//!
//! Given two compositions of the same weight n, the meander places n
//! vertices in a row, folds each block of the first composition into nested
//! top arcs, and each block of the second into bottom arcs. Every vertex
//! carries at most one top and one bottom edge, so every connected component
//! is a path (isolated vertices included) or a cycle, and the seaweed index
//! is 2·cycles + paths − 1.
//!
//! A coinciding top and bottom arc between the same two vertices counts as
//! two parallel edges and hence forms a 2-cycle.

use thiserror::Error;

use crate::partition::Composition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MeanderError {
    #[error("weight mismatch: top composition has weight {top}, bottom has weight {bottom}")]
    WeightMismatch { top: u64, bottom: u64 },
}

/// Cycle and path totals of a meander. An isolated vertex is a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentCount {
    pub cycles: u64,
    pub paths: u64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Top,
    Bottom,
}

/// Meander graph on a row of vertices, stored as the two pairing
/// involutions. Vertex ids are 0-based internally; text output is 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meander {
    top: Vec<Option<u32>>,
    bottom: Vec<Option<u32>>,
}

fn pair_blocks(parts: &[u32], partner: &mut [Option<u32>]) {
    let mut offset = 0u32;
    for &len in parts {
        for j in 0..len / 2 {
            let a = offset + j;
            let b = offset + len - 1 - j;
            partner[a as usize] = Some(b);
            partner[b as usize] = Some(a);
        }
        offset += len;
    }
}

impl Meander {
    /// Builds the meander of the pair `top`/`bottom`. Within each block of
    /// length L, vertex j is paired with vertex L+1−j (1-based within the
    /// block); the middle vertex of an odd block stays unpaired on that
    /// side.
    pub fn new(top: &Composition, bottom: &Composition) -> Result<Self, MeanderError> {
        if top.weight() != bottom.weight() {
            return Err(MeanderError::WeightMismatch {
                top: top.weight(),
                bottom: bottom.weight(),
            });
        }
        let n = top.weight() as usize;
        let mut m = Meander { top: vec![None; n], bottom: vec![None; n] };
        pair_blocks(top.parts(), &mut m.top);
        pair_blocks(bottom.parts(), &mut m.bottom);
        Ok(m)
    }

    pub fn vertex_count(&self) -> usize {
        self.top.len()
    }

    /// Top partner of a 0-based vertex, if any.
    pub fn top_partner(&self, v: usize) -> Option<u32> {
        self.top[v]
    }

    pub fn bottom_partner(&self, v: usize) -> Option<u32> {
        self.bottom[v]
    }

    /// Top edges as 0-based pairs (a, b) with a < b, in order of left
    /// endpoint.
    pub fn top_edges(&self) -> Vec<(u32, u32)> {
        collect_edges(&self.top)
    }

    pub fn bottom_edges(&self) -> Vec<(u32, u32)> {
        collect_edges(&self.bottom)
    }

    fn degree(&self, v: usize) -> u8 {
        self.top[v].is_some() as u8 + self.bottom[v].is_some() as u8
    }

    /// Walks a component starting from `v` along `first` and alternating
    /// sides, marking visited vertices, until the walk leaves the graph or
    /// returns to a visited vertex.
    fn walk(&self, v: usize, first: Side, visited: &mut [bool]) {
        let mut current = v;
        let mut side = first;
        visited[current] = true;
        loop {
            let next = match side {
                Side::Top => self.top[current],
                Side::Bottom => self.bottom[current],
            };
            match next {
                Some(w) if !visited[w as usize] => {
                    current = w as usize;
                    visited[current] = true;
                    side = match side {
                        Side::Top => Side::Bottom,
                        Side::Bottom => Side::Top,
                    };
                }
                _ => return,
            }
        }
    }

    /// Classifies every component as a cycle or path.
    ///
    /// First pass: every unvisited vertex of degree ≤ 1 starts a path walk
    /// (isolated vertices included). Second pass: anything still unvisited
    /// has degree 2 and lies on a cycle. O(n) time and memory.
    pub fn component_counts(&self) -> ComponentCount {
        let n = self.vertex_count();
        let mut visited = vec![false; n];
        let mut paths = 0u64;
        let mut cycles = 0u64;
        for v in 0..n {
            if !visited[v] && self.degree(v) <= 1 {
                paths += 1;
                let side = if self.top[v].is_some() { Side::Top } else { Side::Bottom };
                self.walk(v, side, &mut visited);
            }
        }
        for v in 0..n {
            if !visited[v] {
                cycles += 1;
                self.walk(v, Side::Top, &mut visited);
            }
        }
        ComponentCount { cycles, paths }
    }

    /// Seaweed index 2C + P − 1 of this meander. The empty meander has
    /// index −1.
    pub fn index(&self) -> i64 {
        let ComponentCount { cycles, paths } = self.component_counts();
        2 * cycles as i64 + paths as i64 - 1
    }
}

fn collect_edges(partner: &[Option<u32>]) -> Vec<(u32, u32)> {
    partner
        .iter()
        .enumerate()
        .filter_map(|(a, &b)| {
            let b = b?;
            (a < b as usize).then_some((a as u32, b))
        })
        .collect()
}

/// Seaweed index of the pair `top`/`bottom`: 2C + P − 1 over the meander.
/// Both compositions empty gives −1.
pub fn seaweed_index(top: &Composition, bottom: &Composition) -> Result<i64, MeanderError> {
    Ok(Meander::new(top, bottom)?.index())
}

/// Path count from odd-part counts alone: (op(top) + op(bottom)) / 2, an
/// integer because both op values are congruent to the weight mod 2. Agrees
/// with the path total of the meander without building it.
pub fn path_count_from_odd_parts(
    top: &Composition,
    bottom: &Composition,
) -> Result<u64, MeanderError> {
    if top.weight() != bottom.weight() {
        return Err(MeanderError::WeightMismatch { top: top.weight(), bottom: bottom.weight() });
    }
    Ok((top.odd_part_count() + bottom.odd_part_count()) / 2)
}

/// Parity of the seaweed index, ((op(top)+op(bottom))/2 − 1) mod 2, without
/// building the graph.
pub fn index_parity_from_odd_parts(
    top: &Composition,
    bottom: &Composition,
) -> Result<u8, MeanderError> {
    let p = path_count_from_odd_parts(top, bottom)? as i64;
    Ok((p - 1).rem_euclid(2) as u8)
}

/// Output format for meander drawings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Tikz,
}

impl Meander {
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Svg => self.to_svg(),
            RenderFormat::Tikz => self.to_tikz(),
        }
    }

    /// Standalone SVG: vertices equally spaced on a baseline, top edges as
    /// arcs above, bottom edges below, arc height proportional to span.
    pub fn to_svg(&self) -> String {
        const SPACING: i64 = 40;
        const MARGIN: i64 = 24;
        const RADIUS: i64 = 3;

        let n = self.vertex_count() as i64;
        let max_span = |edges: &[(u32, u32)]| {
            edges.iter().map(|&(a, b)| i64::from(b - a)).max().unwrap_or(0)
        };
        let arc_height = |span: i64| span * SPACING * 2 / 5;
        let top_h = arc_height(max_span(&self.top_edges()));
        let bot_h = arc_height(max_span(&self.bottom_edges()));
        let width = MARGIN * 2 + SPACING * (n - 1).max(0);
        let base_y = MARGIN + top_h;
        let height = base_y + bot_h + MARGIN;
        let x = |v: u32| MARGIN + SPACING * i64::from(v);

        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">\n"
        ));
        for v in 0..self.vertex_count() as u32 {
            out.push_str(&format!(
                "  <circle class=\"vertex\" cx=\"{}\" cy=\"{base_y}\" r=\"{RADIUS}\" />\n",
                x(v)
            ));
        }
        // Top arcs sweep counterclockwise (bulge up), bottom arcs clockwise.
        for (a, b) in self.top_edges() {
            let (x1, x2) = (x(a), x(b));
            let (rx, ry) = ((x2 - x1) / 2, arc_height(i64::from(b - a)));
            out.push_str(&format!(
                "  <path class=\"top\" d=\"M {x1} {base_y} A {rx} {ry} 0 0 1 {x2} {base_y}\" \
                 fill=\"none\" stroke=\"black\" />\n"
            ));
        }
        for (a, b) in self.bottom_edges() {
            let (x1, x2) = (x(a), x(b));
            let (rx, ry) = ((x2 - x1) / 2, arc_height(i64::from(b - a)));
            out.push_str(&format!(
                "  <path class=\"bottom\" d=\"M {x1} {base_y} A {rx} {ry} 0 0 0 {x2} {base_y}\" \
                 fill=\"none\" stroke=\"black\" />\n"
            ));
        }
        out.push_str("</svg>\n");
        out
    }

    /// TikZ drawing commands, suitable for the inside of a bare
    /// `tikzpicture` environment. Vertices sit at (v, 0) with unit spacing.
    pub fn to_tikz(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            out.push_str(&format!("\\filldraw ({v},0) circle (0.5mm);\n"));
        }
        for (a, b) in self.top_edges() {
            out.push_str(&format!("\\draw ({a},0) to[out=90,in=90] ({b},0);\n"));
        }
        for (a, b) in self.bottom_edges() {
            out.push_str(&format!("\\draw ({a},0) to[out=-90,in=-90] ({b},0);\n"));
        }
        out
    }
}
