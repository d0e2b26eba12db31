//! Certificate files: `key: value` lines.
//!
//! ```text
//! k: 1
//! case: genus1-ramified
//! curve: -x^3+y^2+x
//! witness.apex: 0 0
//! ...
//! conclusion: finitely many rational points by Faltings
//! ```
//!
//! Polynomials use the expression grammar; univariate ones are in `t`,
//! slices over `ℚ(√k)(i)` are split into real and imaginary parts. A
//! wrapped certificate is written with its keys under `witness.inner.`.

use std::fmt::Write;

use ratdist::arith::{fmt_rat, parse_rat, SqfInt, GQF, QF};
use ratdist::certify::{
    CaseTag, Certificate, Conclusion, GenusBasis, HyperModel, RamificationReport, Witness,
};
use ratdist::curveops::{ConeSlices, CubicNormalForm, Curve, Factor, FactorKind, FactorReport, QjData};
use ratdist::geom::{NPt, Similarity};
use ratdist::poly::{BPoly, UPoly};

use crate::expr::{parse_poly, parse_qf, parse_upoly};
use crate::formats::{format_err, FormatError};

type Lines = Vec<(String, String)>;

fn push(out: &mut Lines, key: &str, value: impl ToString) {
    out.push((key.to_string(), value.to_string()));
}

fn npt_text(p: &NPt) -> String {
    format!("{} {}", fmt_rat(&p.r1), fmt_rat(&p.r2))
}

fn gqf_parts(p: &UPoly<GQF>) -> (UPoly<QF>, UPoly<QF>) {
    let k = p.ctx().clone();
    (p.map(k, |c| c.re.clone()), p.map(k, |c| c.im.clone()))
}

fn push_slices(out: &mut Lines, s: &ConeSlices) {
    for (name, p, n) in [("plus", &s.plus, s.plus_count), ("minus", &s.minus, s.minus_count)] {
        let (re, im) = gqf_parts(p);
        push(out, &format!("slice-{name}.re"), re.display_var("x"));
        push(out, &format!("slice-{name}.im"), im.display_var("x"));
        push(out, &format!("slice-{name}.count"), n);
    }
}

fn report_text(r: &RamificationReport) -> String {
    format!("g1_lower={} deg_pi={} ram_count={} g2_lower={}", r.g1_lower, r.deg_pi, r.ram_count, r.g2_lower)
}

fn basis_text(b: &GenusBasis) -> String {
    match b {
        GenusBasis::SmoothCubic => "smooth-cubic".into(),
        GenusBasis::NoLineOrCircleFactor => "no-line-or-circle-factor".into(),
        GenusBasis::Asserted(g) => format!("asserted {g}"),
    }
}

fn certificate_lines(c: &Certificate) -> Lines {
    let mut out = Lines::new();
    push(&mut out, "k", c.curve.k());
    push(&mut out, "case", c.case);
    push(&mut out, "curve", &c.curve);
    let mut w = Lines::new();
    match &c.witness {
        Witness::Factors(report) => {
            for f in &report.factors {
                push(&mut w, "factor", format!("{} {}", f.kind, f.poly));
            }
            push(&mut w, "cofactor", &report.cofactor);
        }
        Witness::LineUnion => push(&mut w, "line-union", "yes"),
        Witness::Asserted { genus } => push(&mut w, "asserted-genus", genus),
        Witness::Cone { apex, slices, basis, report } => {
            push(&mut w, "apex", npt_text(apex));
            push(&mut w, "rotation", "1 0");
            push_slices(&mut w, slices);
            push(&mut w, "basis", basis_text(basis));
            push(&mut w, "report", report_text(report));
        }
        Witness::Inverted { center, inverted, kappa, apex, slices, circular, report } => {
            push(&mut w, "center", npt_text(center));
            push(&mut w, "inverted", inverted);
            push(&mut w, "kappa", kappa);
            push(&mut w, "apex", npt_text(apex));
            push(&mut w, "rotation", "1 0");
            push_slices(&mut w, slices);
            push(&mut w, "circular", format!("{} {}", circular[0], circular[1]));
            push(&mut w, "report", report_text(report));
        }
        Witness::CubicProduct { point, nf, similarity, qs, model } => {
            push(&mut w, "point", npt_text(point));
            push(&mut w, "normal-form", format!("{}; {}; {}", nf.b, nf.d, nf.e));
            push(
                &mut w,
                "similarity",
                format!(
                    "{}; {}; {}; {}",
                    similarity.translation.re,
                    similarity.translation.im,
                    similarity.multiplier.re,
                    similarity.multiplier.im
                ),
            );
            for q in qs {
                push(&mut w, "q", format!("{}; {}", q.t_j, q.q.display_var("t")));
            }
            push(&mut w, "model", model.rhs.display_var("t"));
            push(&mut w, "model-squarefree", model.squarefree);
            push(&mut w, "model-genus", model.genus.map_or("none".to_string(), |g| g.to_string()));
        }
        Witness::ConicInverted { center, inverted, kappa, inner } => {
            push(&mut w, "center", npt_text(center));
            push(&mut w, "inverted", inverted);
            push(&mut w, "kappa", kappa);
            for (key, value) in certificate_lines(inner) {
                w.push((format!("inner.{key}"), value));
            }
        }
    }
    out.extend(w.into_iter().map(|(key, v)| (format!("witness.{key}"), v)));
    push(&mut out, "conclusion", c.conclusion);
    out
}

pub fn write_certificate(c: &Certificate) -> String {
    let mut s = String::new();
    for (key, value) in certificate_lines(c) {
        writeln!(s, "{key}: {value}").expect("string write");
    }
    s
}

/// The parsed lines with their source line numbers.
struct Fields {
    entries: Vec<(usize, String, String)>,
    k: SqfInt,
}

impl Fields {
    fn all(&self, key: &str) -> Vec<(usize, &str)> {
        self.entries.iter().filter(|(_, k, _)| k == key).map(|(l, _, v)| (*l, v.as_str())).collect()
    }

    fn get(&self, key: &str) -> Result<(usize, &str), FormatError> {
        match self.all(key).as_slice() {
            [one] => Ok(*one),
            [] => format_err(self.entries.first().map_or(1, |e| e.0), format!("missing '{key}'")),
            [_, (l, _), ..] => format_err(*l, format!("repeated '{key}'")),
        }
    }

    fn witness(&self, name: &str) -> Result<(usize, &str), FormatError> {
        self.get(&format!("witness.{name}"))
    }

    fn num<T: std::str::FromStr>(&self, name: &str) -> Result<T, FormatError> {
        let (l, v) = self.witness(name)?;
        v.parse().or_else(|_| format_err(l, format!("bad number {v:?}")))
    }

    fn poly(&self, name: &str) -> Result<BPoly<QF>, FormatError> {
        let (l, v) = self.witness(name)?;
        parse_poly(v, self.k).or_else(|e| format_err(l, e.to_string()))
    }

    fn curve(&self, name: &str) -> Result<Curve, FormatError> {
        let (l, _) = self.witness(name)?;
        Curve::new(self.poly(name)?).or_else(|e| format_err(l, e.to_string()))
    }

    fn npt(&self, name: &str) -> Result<NPt, FormatError> {
        let (l, v) = self.witness(name)?;
        npt_at(l, v)
    }

    fn upoly(&self, name: &str, var: char) -> Result<UPoly<QF>, FormatError> {
        let (l, v) = self.witness(name)?;
        parse_upoly(v, self.k, var).or_else(|e| format_err(l, e.to_string()))
    }

    fn gqf_poly(&self, name: &str) -> Result<UPoly<GQF>, FormatError> {
        let re = self.upoly(&format!("{name}.re"), 'x')?;
        let im = self.upoly(&format!("{name}.im"), 'x')?;
        let n = re.coeffs().len().max(im.coeffs().len());
        let coeffs = (0..n)
            .map(|i| GQF::new(re.coeff(i), im.coeff(i)))
            .collect::<Result<Vec<_>, _>>()
            .or_else(|e| format_err(self.witness(&format!("{name}.re"))?.0, e.to_string()))?;
        Ok(UPoly::new(self.k, coeffs))
    }

    fn slices(&self) -> Result<ConeSlices, FormatError> {
        Ok(ConeSlices {
            plus: self.gqf_poly("slice-plus")?,
            minus: self.gqf_poly("slice-minus")?,
            plus_count: self.num("slice-plus.count")?,
            minus_count: self.num("slice-minus.count")?,
        })
    }

    fn report(&self) -> Result<RamificationReport, FormatError> {
        let (l, v) = self.witness("report")?;
        let mut vals = [0u32; 4];
        let names = ["g1_lower", "deg_pi", "ram_count", "g2_lower"];
        let words: Vec<&str> = v.split_whitespace().collect();
        if words.len() != 4 {
            return format_err(l, "expected four 'name=value' entries");
        }
        for (slot, (word, name)) in vals.iter_mut().zip(words.iter().zip(names)) {
            match word.split_once('=') {
                Some((n, x)) if n == name => {
                    *slot = x.parse().or_else(|_| format_err(l, format!("bad value in {word:?}")))?
                }
                _ => return format_err(l, format!("expected '{name}=…', found {word:?}")),
            }
        }
        Ok(RamificationReport { g1_lower: vals[0], deg_pi: vals[1], ram_count: vals[2], g2_lower: vals[3] })
    }

    fn rotation(&self) -> Result<(), FormatError> {
        let (l, v) = self.witness("rotation")?;
        if v.split_whitespace().collect::<Vec<_>>() == ["1", "0"] {
            Ok(())
        } else {
            format_err(l, "only the identity rotation about the apex is recorded")
        }
    }

    fn qfs(&self, line: usize, v: &str, n: usize) -> Result<Vec<QF>, FormatError> {
        let parts: Vec<&str> = v.split(';').collect();
        if parts.len() != n {
            return format_err(line, format!("expected {n} values separated by ';'"));
        }
        parts.iter().map(|p| parse_qf(p, self.k).or_else(|e| format_err(line, e.to_string()))).collect()
    }
}

fn npt_at(l: usize, v: &str) -> Result<NPt, FormatError> {
    match v.split_whitespace().collect::<Vec<_>>().as_slice() {
        [a, b] => {
            let r = |s: &str| parse_rat(s).or_else(|e| format_err(l, e.to_string()));
            Ok(NPt::new(r(a)?, r(b)?))
        }
        _ => format_err(l, format!("expected a point 'r1 r2', found {v:?}")),
    }
}

fn parse_basis(l: usize, v: &str) -> Result<GenusBasis, FormatError> {
    match v.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["smooth-cubic"] => Ok(GenusBasis::SmoothCubic),
        ["no-line-or-circle-factor"] => Ok(GenusBasis::NoLineOrCircleFactor),
        ["asserted", g] => g.parse().map(GenusBasis::Asserted).or_else(|_| format_err(l, "bad genus")),
        _ => format_err(l, format!("unknown genus basis {v:?}")),
    }
}

fn parse_kind(l: usize, v: &str) -> Result<FactorKind, FormatError> {
    match v {
        "line" => Ok(FactorKind::Line),
        "circle" => Ok(FactorKind::Circle),
        "degenerate-circle" => Ok(FactorKind::DegenerateCircle),
        _ => format_err(l, format!("unknown factor kind {v:?}")),
    }
}

fn parse_fields(f: &Fields) -> Result<Certificate, FormatError> {
    let (cl, case_text) = f.get("case")?;
    let case = CaseTag::parse(case_text).map_or_else(|| format_err(cl, format!("unknown case {case_text:?}")), Ok)?;
    let (ul, curve_text) = f.get("curve")?;
    let curve = parse_poly(curve_text, f.k)
        .map_err(|e| e.to_string())
        .and_then(|p| Curve::new(p).map_err(|e| e.to_string()))
        .or_else(|e| format_err(ul, e))?;
    let (nl, concl_text) = f.get("conclusion")?;
    let conclusion =
        Conclusion::parse(concl_text).map_or_else(|| format_err(nl, format!("unknown conclusion {concl_text:?}")), Ok)?;
    let witness = match case {
        CaseTag::LineComponent | CaseTag::CircleComponent if !f.all("witness.line-union").is_empty() => {
            Witness::LineUnion
        }
        CaseTag::LineComponent | CaseTag::CircleComponent => {
            let mut factors = Vec::new();
            for (l, v) in f.all("witness.factor") {
                let Some((kind, poly)) = v.split_once(' ') else {
                    return format_err(l, "expected '<kind> <polynomial>'");
                };
                let poly = parse_poly(poly, f.k).or_else(|e| format_err(l, e.to_string()))?;
                factors.push(Factor { kind: parse_kind(l, kind)?, poly });
            }
            Witness::Factors(FactorReport { factors, cofactor: f.poly("cofactor")? })
        }
        CaseTag::Genus2Direct => Witness::Asserted { genus: f.num("asserted-genus")? },
        CaseTag::Genus1Ramified | CaseTag::Genus0HighDeg => {
            f.rotation()?;
            let (bl, b) = f.witness("basis")?;
            Witness::Cone {
                apex: f.npt("apex")?,
                slices: f.slices()?,
                basis: parse_basis(bl, b)?,
                report: f.report()?,
            }
        }
        CaseTag::CubicInvertedDeg5 => {
            f.rotation()?;
            let (l, v) = f.witness("circular")?;
            let counts: Vec<usize> = v.split_whitespace().map(|s| s.parse()).collect::<Result<_, _>>()
                .or_else(|_| format_err(l, "bad counts"))?;
            let [a, b] = counts.as_slice() else {
                return format_err(l, "expected two counts");
            };
            Witness::Inverted {
                center: f.npt("center")?,
                inverted: f.curve("inverted")?,
                kappa: f.num("kappa")?,
                apex: f.npt("apex")?,
                slices: f.slices()?,
                circular: [*a, *b],
                report: f.report()?,
            }
        }
        CaseTag::CubicK2Product => {
            let (l, v) = f.witness("normal-form")?;
            let bde = f.qfs(l, v, 3)?;
            let nf = CubicNormalForm::new(bde[0].clone(), bde[1].clone(), bde[2].clone())
                .or_else(|e| format_err(l, e.to_string()))?;
            let (l, v) = f.witness("similarity")?;
            let s = f.qfs(l, v, 4)?;
            let similarity = GQF::new(s[0].clone(), s[1].clone())
                .and_then(|t| Ok((t, GQF::new(s[2].clone(), s[3].clone())?)))
                .and_then(|(t, m)| Similarity::new(t, m))
                .or_else(|e| format_err(l, e.to_string()))?;
            let mut qs = Vec::new();
            for (l, v) in f.all("witness.q") {
                let Some((t, q)) = v.split_once(';') else {
                    return format_err(l, "expected 't_j; Q(t)'");
                };
                let t_j = parse_qf(t, f.k).or_else(|e| format_err(l, e.to_string()))?;
                let q = parse_upoly(q, f.k, 't').or_else(|e| format_err(l, e.to_string()))?;
                qs.push(QjData { t_j, c2: q.coeff(2), c1: q.coeff(1), c0: q.coeff(0), q });
            }
            let rhs = f.upoly("model", 't')?;
            let (l, sq) = f.witness("model-squarefree")?;
            let squarefree = sq.parse().or_else(|_| format_err(l, "expected true or false"))?;
            let (l, g) = f.witness("model-genus")?;
            let genus = match g {
                "none" => None,
                g => Some(g.parse().or_else(|_| format_err(l, "bad genus"))?),
            };
            Witness::CubicProduct {
                point: f.npt("point")?,
                nf,
                similarity,
                qs,
                model: HyperModel { rhs, squarefree, genus },
            }
        }
        CaseTag::ConicInverted => {
            let inner_entries = f
                .entries
                .iter()
                .filter_map(|(l, key, v)| key.strip_prefix("witness.inner.").map(|key| (*l, key.to_string(), v.clone())))
                .collect();
            let inner = parse_fields(&Fields { entries: inner_entries, k: f.k })?;
            Witness::ConicInverted {
                center: f.npt("center")?,
                inverted: f.curve("inverted")?,
                kappa: f.num("kappa")?,
                inner: Box::new(inner),
            }
        }
    };
    Ok(Certificate { case, curve, witness, conclusion })
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    let mut entries = Vec::new();
    for (l, line) in crate::formats::content_lines(text) {
        let Some((key, value)) = line.split_once(':') else {
            return format_err(l, format!("expected 'key: value', found {line:?}"));
        };
        entries.push((l, key.trim().to_string(), value.trim().to_string()));
    }
    let k_line = entries.iter().find(|e| e.1 == "k").map(|e| (e.0, e.2.clone()));
    let Some((kl, kv)) = k_line else {
        return format_err(1, "missing 'k'");
    };
    let k = kv
        .parse::<u64>()
        .ok()
        .and_then(|v| SqfInt::new(v).ok())
        .map_or_else(|| format_err(kl, format!("bad field parameter {kv:?}")), Ok)?;
    let fields = Fields { entries, k };
    parse_fields(&fields)
}
