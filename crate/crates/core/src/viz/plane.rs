use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::VizError;

const TOLERANCE: f64 = 1e-9;

/// The real matrix `[[a, b], [c, d]]` acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneTransform {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl PlaneTransform {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        PlaneTransform { a, b, c, d }
    }

    pub fn scaling(s: f64) -> Self {
        Self::new(s, 0.0, 0.0, s)
    }

    /// Counterclockwise rotation by `theta` radians.
    pub fn rotation(theta: f64) -> Self {
        let (sin, cos) = theta.sin_cos();
        Self::new(cos, -sin, sin, cos)
    }

    pub fn horizontal_shear(m: f64) -> Self {
        Self::new(1.0, m, 0.0, 1.0)
    }

    pub fn vertical_shear(m: f64) -> Self {
        Self::new(1.0, 0.0, m, 1.0)
    }

    pub fn determinant(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Images of `(0,0)`, `(1,0)`, `(1,1)`, `(0,1)`, in that order.
    pub fn parallelogram(&self) -> [(f64, f64); 4] {
        let PlaneTransform { a, b, c, d } = *self;
        [(0.0, 0.0), (a, c), (a + b, c + d), (b, d)]
    }

    fn check_finite(&self) -> Result<(), VizError> {
        for (name, v) in [('a', self.a), ('b', self.b), ('c', self.c), ('d', self.d)] {
            if !v.is_finite() {
                return Err(VizError::NonFinite { name });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "class")]
pub enum TransformClass {
    Scaling { s: f64 },
    Rotation { theta: f64 },
    HShear { m: f64 },
    VShear { m: f64 },
    General,
}

impl TransformClass {
    pub fn name(&self) -> &'static str {
        match self {
            TransformClass::Scaling { .. } => "scaling",
            TransformClass::Rotation { .. } => "rotation",
            TransformClass::HShear { .. } => "h-shear",
            TransformClass::VShear { .. } => "v-shear",
            TransformClass::General => "general",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformReport {
    /// `(0,0)`, `(a,c)`, `(b,d)`, `(a+b,c+d)`.
    pub vertices: [(f64, f64); 4],
    pub signed_area: f64,
    pub flipped: bool,
    pub class: TransformClass,
}

fn near(x: f64, y: f64) -> bool {
    (x - y).abs() <= TOLERANCE
}

fn classify(t: &PlaneTransform) -> TransformClass {
    let PlaneTransform { a, b, c, d } = *t;
    if near(b, 0.0) && near(c, 0.0) && near(a, d) {
        return TransformClass::Scaling { s: a };
    }
    let orthogonal = near(a * a + c * c, 1.0) && near(b * b + d * d, 1.0) && near(a * b + c * d, 0.0);
    if orthogonal && near(t.determinant(), 1.0) {
        return TransformClass::Rotation { theta: c.atan2(a) };
    }
    if near(a, 1.0) && near(d, 1.0) && near(c, 0.0) {
        return TransformClass::HShear { m: b };
    }
    if near(a, 1.0) && near(d, 1.0) && near(b, 0.0) {
        return TransformClass::VShear { m: c };
    }
    TransformClass::General
}

/// Describes the image of the unit square under `t`.
///
/// Classes are tried in the order scaling, rotation, horizontal shear,
/// vertical shear, so the identity reports as scaling by 1.
pub fn transform_report(t: &PlaneTransform) -> Result<TransformReport, VizError> {
    t.check_finite()?;
    let PlaneTransform { a, b, c, d } = *t;
    let signed_area = t.determinant();
    Ok(TransformReport {
        vertices: [(0.0, 0.0), (a, c), (b, d), (a + b, c + d)],
        signed_area,
        flipped: signed_area < 0.0,
        class: classify(t),
    })
}

fn num(x: f64) -> String {
    let s = format!("{x:.4}");
    if s.trim_start_matches('-')
        .trim_matches(|c| c == '0' || c == '.')
        .is_empty()
    {
        "0.0000".to_string()
    } else {
        s
    }
}

fn polygon(points: &[(f64, f64)]) -> String {
    let parts: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{},{}", num(x), num(-y)))
        .collect();
    parts.join(" ")
}

/// Draws the unit square and its image under `t` as a static SVG document.
///
/// Coordinates are plane units with the y axis pointing up.
pub fn emit_svg(t: &PlaneTransform) -> Result<String, VizError> {
    t.check_finite()?;
    let square = PlaneTransform::scaling(1.0).parallelogram();
    let image = t.parallelogram();
    let all = square.iter().chain(image.iter());
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(x, y) in all {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let pad = 0.1 * (max_x - min_x).max(max_y - min_y);
    let (x0, y0) = (min_x - pad, -max_y - pad);
    let (w, h) = (max_x - min_x + 2.0 * pad, max_y - min_y + 2.0 * pad);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"400\" height=\"400\">",
        num(x0),
        num(y0),
        num(w),
        num(h)
    )
    .unwrap();
    writeln!(
        out,
        "  <polygon id=\"unit-square\" points=\"{}\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 2\" vector-effect=\"non-scaling-stroke\"/>",
        polygon(&square)
    )
    .unwrap();
    let fill = if t.determinant() < 0.0 {
        "#d95f02"
    } else {
        "#1b9e77"
    };
    writeln!(
        out,
        "  <polygon id=\"image\" points=\"{}\" fill=\"{fill}\" fill-opacity=\"0.4\" stroke=\"{fill}\" vector-effect=\"non-scaling-stroke\"/>",
        polygon(&image)
    )
    .unwrap();
    out.push_str("</svg>\n");
    Ok(out)
}
