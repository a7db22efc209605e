//! Linear polyacenes `L_h` and their closed-form index values, used as
//! independent expected values for the cut pipeline.
//!
//! The cuts of `L_h` are one long vertical cut `B` (size `h + 1`) plus, per
//! hexagon `k`, a falling cut `C_k` and a rising cut `D_k` (size 2 each).
//! For each unordered cut pair, the component edge counts of
//! `L_h − C − C'` follow fixed polynomials in `h`, `k`, `l`.

use crate::benzenoid::{build_benzenoid, Benzenoid, Direction};
use crate::error::{add, mul, Error, Result};

/// The linear polyacene `L_h`: hexagons `(0,0) .. (h-1,0)`.
pub fn generate_polyacene(h: usize) -> Result<Benzenoid> {
    if h < 1 {
        return Err(Error::InvalidParameter(
            "polyacene needs at least one hexagon".into(),
        ));
    }
    let hexes: Vec<(i64, i64)> = (0..h as i64).map(|q| (q, 0)).collect();
    build_benzenoid(&hexes)
}

/// Exact closed-form values for `L_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyaceneFormulas {
    pub h: u64,
    /// `5h + 1`
    pub m: u64,
    /// `h (50h² + 69h + 43) / 6`
    pub w_e: u64,
    /// `h (25h³ − 29h² + 14h + 8) / 6`
    pub ww_star: u64,
    /// `h (25h³ + 71h² + 77h + 79) / 6`
    pub ww_e: u64,
}

/// Evaluates the closed formulas; each polynomial is divisible by 6, which
/// is asserted before dividing.
pub fn closed_formulas(h: u64) -> Result<PolyaceneFormulas> {
    if h < 1 {
        return Err(Error::InvalidParameter("h must be at least 1".into()));
    }
    let poly = |coeffs: &[(u64, bool)]| -> Result<u64> {
        // Signed Horner-free evaluation: Σ ±c·h^i with i implied by
        // position, highest degree first.
        let mut pos: u64 = 0;
        let mut neg: u64 = 0;
        let mut power: u64 = 1;
        for &(c, negative) in coeffs.iter().rev() {
            let term = mul(c, power)?;
            if negative {
                neg = add(neg, term)?;
            } else {
                pos = add(pos, term)?;
            }
            if coeffs.len() > 1 {
                power = mul(power, h)?;
            }
        }
        pos.checked_sub(neg).ok_or(Error::Overflow)
    };
    let scaled = |p: u64| -> Result<u64> {
        let raw = mul(h, p)?;
        debug_assert_eq!(raw % 6, 0, "polyacene polynomial not divisible by 6");
        if raw % 6 != 0 {
            return Err(Error::Internal("polyacene polynomial not divisible by 6".into()));
        }
        Ok(raw / 6)
    };
    let m = add(mul(5, h)?, 1)?;
    let w_e = scaled(poly(&[(50, false), (69, false), (43, false)])?)?;
    let ww_star = scaled(poly(&[(25, false), (29, true), (14, false), (8, false)])?)?;
    let ww_e = scaled(poly(&[(25, false), (71, false), (77, false), (79, false)])?)?;
    Ok(PolyaceneFormulas {
        h,
        m,
        w_e,
        ww_star,
        ww_e,
    })
}

/// Named elementary cuts of `L_h`, indices 1-based as usual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyaceneCut {
    /// The single vertical cut through the whole chain.
    B,
    /// Falling oblique cut of hexagon `k`.
    C(u64),
    /// Rising oblique cut of hexagon `k`.
    D(u64),
}

/// Unordered pair of named cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutPair(pub PolyaceneCut, pub PolyaceneCut);

/// Component edge counts of `L_h − C − C'` per the pair family; `c` and `d`
/// are absent for non-intersecting pairs, whose removal leaves only three
/// components (the middle one is determined by the totals).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentCounts {
    pub a: u64,
    pub b: u64,
    pub c: Option<u64>,
    pub d: Option<u64>,
}

impl ComponentCounts {
    fn four(a: u64, b: u64, c: u64, d: u64) -> Self {
        ComponentCounts {
            a,
            b,
            c: Some(c),
            d: Some(d),
        }
    }

    fn two(a: u64, b: u64) -> Self {
        ComponentCounts {
            a,
            b,
            c: None,
            d: None,
        }
    }

    /// Full expected multiset of component edge counts once the middle
    /// component of a non-intersecting pair is reconstructed from the
    /// totals (`remaining` = `m` minus both cut sizes).
    pub fn multiset(&self, remaining: u64) -> Vec<u64> {
        let mut v = match (self.c, self.d) {
            (Some(c), Some(d)) => vec![self.a, self.b, c, d],
            _ => vec![self.a, self.b, remaining - self.a - self.b],
        };
        v.sort_unstable();
        v
    }
}

fn check_index(h: u64, k: u64) -> Result<()> {
    if (1..=h).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "cut index {k} out of range 1..={h}"
        )))
    }
}

/// Symbolic component edge counts for a cut pair of `L_h`.
pub fn cut_pair_component_counts(h: u64, pair: CutPair) -> Result<ComponentCounts> {
    use PolyaceneCut::{B, C, D};
    let counts = match (pair.0, pair.1) {
        (B, C(k)) | (C(k), B) => {
            check_index(h, k)?;
            ComponentCounts::four(2 * k - 1, 2 * (h - k) + 1, 2 * (h - k), 2 * (k - 1))
        }
        (B, D(k)) | (D(k), B) => {
            check_index(h, k)?;
            ComponentCounts::four(2 * (k - 1), 2 * (h - k), 2 * (h - k) + 1, 2 * k - 1)
        }
        (C(k), C(l)) | (D(k), D(l)) => {
            check_index(h, k)?;
            check_index(h, l)?;
            if k >= l {
                return Err(Error::InvalidParameter(
                    "parallel oblique cuts need k < l".into(),
                ));
            }
            ComponentCounts::two(5 * k - 3, 5 * (h - l) + 2)
        }
        (C(k), D(l)) | (D(l), C(k)) => {
            check_index(h, k)?;
            check_index(h, l)?;
            match k.cmp(&l) {
                std::cmp::Ordering::Less => ComponentCounts::two(5 * k - 3, 5 * (h - l) + 2),
                std::cmp::Ordering::Greater => ComponentCounts::two(5 * l - 3, 5 * (h - k) + 2),
                std::cmp::Ordering::Equal => {
                    ComponentCounts::four(5 * k - 4, 5 * (h - k) + 1, 0, 0)
                }
            }
        }
        (B, B) => {
            return Err(Error::InvalidParameter("B paired with itself".into()));
        }
    };
    Ok(counts)
}

/// Identifies each elementary cut of a generated `L_h` by name: `B` is the
/// unique vertical cut; oblique cuts take their hexagon's 1-based position,
/// falling ones as `C_k`, rising ones as `D_k`.
pub fn classify_cuts(b: &Benzenoid) -> Result<Vec<PolyaceneCut>> {
    let h = b.hex_count();
    let mut names = Vec::with_capacity(b.cuts().len());
    let mut verticals = 0usize;
    for (idx, cut) in b.cuts().iter().enumerate() {
        let dir = b.edge_direction(cut[0]);
        match dir {
            Direction::Vertical => {
                verticals += 1;
                if cut.len() != h + 1 {
                    return Err(Error::Internal(format!(
                        "vertical cut has {} edges, expected {}",
                        cut.len(),
                        h + 1
                    )));
                }
                names.push(PolyaceneCut::B);
            }
            Direction::Falling | Direction::Rising => {
                let hexes = b.cut_hexes(idx);
                if hexes.len() != 1 {
                    return Err(Error::Internal(
                        "oblique polyacene cut spans more than one hexagon".into(),
                    ));
                }
                // Hexes are sorted by coordinate, so index order is spine order.
                let k = hexes[0] as u64 + 1;
                names.push(match dir {
                    Direction::Falling => PolyaceneCut::C(k),
                    _ => PolyaceneCut::D(k),
                });
            }
        }
    }
    if verticals != 1 {
        return Err(Error::Internal(format!(
            "expected one vertical cut in a polyacene, found {verticals}"
        )));
    }
    Ok(names)
}

/// Measured edge counts of the connected components of `g − cut_k − cut_l`,
/// including zero-edge components (isolated vertices), sorted ascending.
pub fn measured_components(b: &Benzenoid, k: usize, l: usize) -> Vec<u64> {
    let g = b.graph();
    let mut removed = vec![false; g.edge_count()];
    for &e in &b.cuts()[k] {
        removed[e] = true;
    }
    for &e in &b.cuts()[l] {
        removed[e] = true;
    }
    let mut comp = vec![usize::MAX; g.vertex_count()];
    let mut sizes: Vec<u64> = Vec::new();
    for start in 0..g.vertex_count() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        sizes.push(0);
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(w, eid) in g.neighbors(u) {
                if !removed[eid] && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
    }
    for (e, &gone) in removed.iter().enumerate() {
        if !gone {
            let (u, _) = g.endpoints(e);
            sizes[comp[u]] += 1;
        }
    }
    sizes.sort_unstable();
    sizes
}
