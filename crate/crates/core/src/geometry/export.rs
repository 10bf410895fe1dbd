use std::fmt::Write as _;
use std::path::Path;

use super::curve::{sample_curve, HypotrochoidSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveFormat {
    Svg,
    Csv,
}

impl std::str::FromStr for CurveFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Self::Svg),
            "csv" => Ok(Self::Csv),
            other => Err(Error::Domain(format!("unknown curve format '{other}'"))),
        }
    }
}

fn header(spec: &HypotrochoidSpec, n: usize) -> String {
    format!(
        "k={} w={}{:+}i eps={} theta={} b={} n_samples={}",
        spec.k, spec.w.re, spec.w.im, spec.eps, spec.theta, spec.b, n
    )
}

/// Rows `alpha,re,im` preceded by a `#` comment echoing the parameters.
pub fn curve_csv(spec: &HypotrochoidSpec, n: usize) -> Result<String> {
    let samples = sample_curve(spec, n)?;
    let mut out = format!("# {}\nalpha,re,im\n", header(spec, n));
    for (a, z) in &samples.points {
        writeln!(out, "{a:.17e},{:.17e},{:.17e}", z.re, z.im).unwrap();
    }
    Ok(out)
}

/// A closed SVG 1.1 path. The view box is centred on `w`, has the
/// mathematical orientation (imaginary axis up) and a 10% margin.
pub fn curve_svg(spec: &HypotrochoidSpec, n: usize) -> Result<String> {
    let samples = sample_curve(spec, n)?;
    let half = 1.1 * spec.radius();
    let side = 2.0 * half;
    let (x0, y0) = (spec.w.re - half, -spec.w.im - half);
    let mut d = String::new();
    for (i, (_, z)) in samples.points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{:.9} {:.9} ", z.re, -z.im).unwrap();
    }
    d.push('Z');
    let stroke = side / 400.0;
    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <!-- {} -->\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" viewBox=\"{x0:.9} {y0:.9} {side:.9} {side:.9}\">\n\
         <path d=\"{d}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke:.9}\"/>\n\
         </svg>\n",
        header(spec, n)
    ))
}

pub fn export_curve(spec: &HypotrochoidSpec, format: CurveFormat, n: usize, path: &Path) -> Result<()> {
    let body = match format {
        CurveFormat::Svg => curve_svg(spec, n)?,
        CurveFormat::Csv => curve_csv(spec, n)?,
    };
    std::fs::write(path, body)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::curve::curve_point;
    use super::*;
    use num_complex::Complex64;

    fn spec(k: u32) -> HypotrochoidSpec {
        HypotrochoidSpec::new(k, Complex64::new(0.5, -1.0), 0.5, 0.0, 1.6).unwrap()
    }

    #[test]
    fn csv_first_row_is_alpha_zero() {
        let s = spec(3);
        let csv = curve_csv(&s, 64).unwrap();
        let mut lines = csv.lines().skip(1);
        assert_eq!(lines.next(), Some("alpha,re,im"));
        let row: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
        let z = curve_point(&s, 0.0);
        assert_eq!(row, vec![0.0, z.re, z.im]);
        assert_eq!(csv.lines().count(), 66);
    }

    #[test]
    fn svg_viewbox_covers_curve() {
        for k in 2..=5 {
            let s = spec(k);
            let svg = curve_svg(&s, 128).unwrap();
            let vb = svg.split("viewBox=\"").nth(1).unwrap().split('"').next().unwrap();
            let nums: Vec<f64> = vb.split(' ').map(|x| x.parse().unwrap()).collect();
            assert!(nums[2] >= 2.0 * s.eps * (s.b + s.b.powi(1 - k as i32)));
            assert!(svg.contains("<path d=\"M"));
        }
    }

    #[test]
    fn output_is_deterministic() {
        let s = spec(4);
        assert_eq!(curve_svg(&s, 256).unwrap(), curve_svg(&s, 256).unwrap());
    }

    #[test]
    fn write_failure_is_io() {
        let r = export_curve(&spec(2), CurveFormat::Csv, 64, Path::new("/nonexistent/dir/x.csv"));
        assert!(matches!(r, Err(Error::Io(_))));
    }
}
