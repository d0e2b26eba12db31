//! Subcommands and the exit-code contract: 0 success, 1 a property failed
//! (witness on standard output), 2 usage or input error, 3 internal
//! inconsistency.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratdist::arith::{fmt_rat, parse_rat, Rat, SqfInt, QF};
use ratdist::certify::{build_line_obstruction, certify_curve, reduce_circle_to_line, CertifyOptions};
use ratdist::construct::{
    integral_search, line_rational_set, transfer_line_to_circle, unit_circle_rational_set, SearchConfig,
};
use ratdist::curveops::{check_identity, CubicNormalForm, Curve};
use ratdist::geom::{
    extract_curve_general, fit_curve, invert_set, normalize_set, points_for_degree, points_on_curve,
    verify_general_position, verify_rational_set, NormalizedSet, Verdict,
};
use ratdist::{Error, ErrorKind};

use crate::cert_text::{parse_certificate, write_certificate};
use crate::expr::parse_poly;
use crate::formats::{parse_normalized, parse_point_file, write_point_set, PointFile};

#[derive(Parser, Debug)]
#[command(name = "ratdist", version, about = "Exact tools for rational distance sets on plane curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that all pairwise distances are rational.
    Verify {
        points: String,
        /// Also require no 3 collinear and no 4 concyclic points.
        #[arg(long)]
        general_position: bool,
    },
    /// Map two anchors of a raw set to (0,0) and (1,0).
    Normalize {
        points: String,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        anchors: Vec<usize>,
    },
    /// Invert about a point of the set.
    Invert {
        points: String,
        #[arg(long)]
        center: usize,
        #[arg(long, default_value = "1")]
        radius: String,
    },
    /// Generate a rational set.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Invert a line set about an off-line point, giving a circle set.
    Transfer {
        points: String,
        #[arg(long)]
        center: usize,
        #[arg(long, default_value = "1")]
        radius: String,
    },
    /// Curves of a given degree through the first d(d+3)/2 points.
    Fit {
        points: String,
        #[arg(long)]
        degree: u32,
    },
    /// Greedy subset in curve-general position up to a degree.
    ExtractGp {
        points: String,
        #[arg(long)]
        max_degree: u32,
    },
    /// Build a finiteness certificate for a curve through the points.
    Certify {
        #[arg(long)]
        curve: String,
        #[arg(long)]
        points: String,
        #[arg(long)]
        assert_genus: Option<u32>,
    },
    /// Re-check a certificate file.
    CheckCertificate { certificate: String },
    /// Genus-2 curve from three points off the axis.
    ObstructLine {
        points: String,
        #[arg(long, num_args = 3, value_names = ["I", "J", "L"])]
        off: Vec<usize>,
    },
    /// Invert about a point on a circle, turning the circle into a line.
    ReduceCircle {
        points: String,
        #[arg(long)]
        curve: String,
        #[arg(long)]
        center: usize,
    },
    /// Exhaustive search for integral sets in [0, B]².
    SearchIntegral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: i64,
        /// Allow collinear triples and concyclic quadruples.
        #[arg(long)]
        allow_degenerate: bool,
    },
    /// Check the distance factorization on singular cubics at random inputs.
    IdentityCheck {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Points w_t = z_t² on the unit circle for t = 0, 1/2, 1/3, …
    Circle {
        #[arg(long)]
        n: usize,
    },
    /// Points (0,0), (1,0), …, (n−1,0).
    Line {
        #[arg(long)]
        n: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Input => 2,
            ErrorKind::Violation => 1,
            ErrorKind::Internal => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Output text plus the exit code (0 or 1).
type Outcome = Result<(String, i32), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        let mut s = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut s).map_err(|e| usage(format!("reading standard input: {e}")))?;
        } else {
            s = std::fs::read_to_string(path).map_err(|e| usage(format!("reading {path}: {e}")))?;
        }
        Ok(s)
    }

    fn normalized(&mut self, path: &str) -> Result<NormalizedSet, Failure> {
        parse_normalized(&self.read(path)?).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn rat_arg(s: &str) -> Result<Rat, Failure> {
    parse_rat(s).map_err(|e| usage(e.to_string()))
}

fn curve_arg(text: &str, k: SqfInt) -> Result<Curve, Failure> {
    let p = parse_poly(text, k).map_err(|e| usage(format!("curve: {e}")))?;
    Ok(Curve::new(p)?)
}

fn ok(s: String) -> Outcome {
    Ok((s, 0))
}

fn verify(set: &NormalizedSet, general_position: bool) -> Outcome {
    if let Verdict::Fails((i, j)) = verify_rational_set(set) {
        return Ok((
            format!(
                "not rational: points {i} and {j} have squared distance {}\n",
                fmt_rat(&set.dist2(i, j))
            ),
            1,
        ));
    }
    if general_position {
        if let Verdict::Fails(w) = verify_general_position(set) {
            let kind = if w.len() == 3 { "collinear" } else { "concyclic" };
            let idx: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            return Ok((format!("not in general position: points {} are {kind}\n", idx.join(" ")), 1));
        }
    }
    ok(format!("rational set of {} points over k = {}\n", set.len(), set.k))
}

/// Random rational with small height.
fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    Rat::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=7).into())
}

fn identity_check(trials: usize, seed: u64) -> Outcome {
    let k = SqfInt::ONE;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut done, mut holds, mut c1q, mut lead, mut cons) = (0usize, 0usize, 0usize, 0usize, 0usize);
    let mut attempts = 0usize;
    while done < trials {
        attempts += 1;
        if attempts > 100 * trials + 100 {
            return Err(Failure { code: 3, message: "could not draw nondegenerate parameters".into() });
        }
        let Ok(nf) = CubicNormalForm::from_rats(small_rat(&mut rng), small_rat(&mut rng), small_rat(&mut rng), k)
        else {
            continue;
        };
        let t = QF::from_rat(k, small_rat(&mut rng));
        let Some(check) = check_identity(&nf, &t)? else {
            continue;
        };
        done += 1;
        holds += usize::from(check.factorization && check.c2 && check.c1 && check.c0);
        c1q += usize::from(check.c1_quoted);
        lead += usize::from(check.leading_quoted);
        cons += usize::from(check.constant_quoted);
    }
    let mut out = format!("{holds}/{trials} identities hold\n");
    writeln!(out, "quoted c1 with -2*b*d*t term: {c1q}/{trials} match").expect("string write");
    writeln!(out, "quoted leading coefficient: {lead}/{trials} match").expect("string write");
    writeln!(out, "quoted constant term: {cons}/{trials} match").expect("string write");
    Ok((out, if holds == trials { 0 } else { 1 }))
}

fn execute(cmd: Command, io: &mut Io<'_>) -> Outcome {
    match cmd {
        Command::Verify { points, general_position } => verify(&io.normalized(&points)?, general_position),
        Command::Normalize { points, anchors } => {
            let text = io.read(&points)?;
            let raw = match parse_point_file(&text).map_err(|e| usage(format!("{points}: {e}")))? {
                PointFile::Raw { points, .. } => points,
                PointFile::Normalized(s) => s.points.iter().map(|p| ratdist::geom::Pt::from_npt(p, s.k)).collect(),
            };
            let (set, sim) = normalize_set(&raw, anchors[0], anchors[1])?;
            let mut out = format!("# z -> ({}) * (z - ({}))\n", sim.multiplier, sim.translation);
            out.push_str(&write_point_set(&set));
            ok(out)
        }
        Command::Invert { points, center, radius } => {
            let set = io.normalized(&points)?;
            ok(write_point_set(&invert_set(&set, center, &rat_arg(&radius)?)?))
        }
        Command::Gen { kind } => match kind {
            GenKind::Circle { n } => {
                let params: Vec<Rat> =
                    (0..n).map(|i| if i == 0 { Rat::from_integer(0.into()) } else { Rat::new(1.into(), (i as i64 + 1).into()) }).collect();
                ok(write_point_set(&unit_circle_rational_set(&params)?))
            }
            GenKind::Line { n } => {
                let values: Vec<Rat> = (0..n).map(|i| Rat::from_integer((i as i64).into())).collect();
                ok(write_point_set(&line_rational_set(&values)?))
            }
        },
        Command::Transfer { points, center, radius } => {
            let set = io.normalized(&points)?;
            ok(write_point_set(&transfer_line_to_circle(&set, center, &rat_arg(&radius)?)?))
        }
        Command::Fit { points, degree } => {
            let set = io.normalized(&points)?;
            let need = points_for_degree(degree);
            if set.len() < need {
                return Err(usage(format!("degree {degree} needs {need} points, the file has {}", set.len())));
            }
            let curves = fit_curve(&set.points[..need], set.k, degree)?;
            let mut out = String::new();
            for c in &curves {
                let on: Vec<String> = points_on_curve(&set, c)?.iter().map(|i| i.to_string()).collect();
                writeln!(out, "curve: {c}\non: {}", on.join(" ")).expect("string write");
            }
            if curves.len() > 1 {
                writeln!(out, "# the first {need} points do not determine a unique curve").expect("string write");
            }
            ok(out)
        }
        Command::ExtractGp { points, max_degree } => {
            let set = io.normalized(&points)?;
            let kept = extract_curve_general(&set, max_degree)?;
            let mut out = format!("# kept {} of {} points\n", kept.len(), set.len());
            out.push_str(&write_point_set(&kept));
            ok(out)
        }
        Command::Certify { curve, points, assert_genus } => {
            let set = io.normalized(&points)?;
            let c = curve_arg(&curve, set.k)?;
            let cert = certify_curve(&c, &set, &CertifyOptions { assert_genus })?;
            if let Verdict::Fails(why) = cert.verify() {
                return Err(Failure { code: 3, message: format!("fresh certificate fails its own check: {why}") });
            }
            ok(write_certificate(&cert))
        }
        Command::CheckCertificate { certificate } => {
            let text = io.read(&certificate)?;
            let cert = parse_certificate(&text).map_err(|e| usage(format!("{certificate}: {e}")))?;
            match cert.verify() {
                Verdict::Holds => ok(format!("certificate verified: {} ({})\n", cert.case, cert.conclusion)),
                Verdict::Fails(why) => Ok((format!("certificate rejected: {why}\n"), 1)),
            }
        }
        Command::ObstructLine { points, off } => {
            let set = io.normalized(&points)?;
            let pick = |i: usize| {
                set.points.get(i).cloned().ok_or_else(|| usage(format!("index {i} out of range")))
            };
            let model = build_line_obstruction(&[pick(off[0])?, pick(off[1])?, pick(off[2])?], set.k)?;
            let genus = model.genus.map_or("unknown".to_string(), |g| g.to_string());
            ok(format!("y^2 = {}\ngenus: {genus}\n", model.rhs))
        }
        Command::ReduceCircle { points, curve, center } => {
            let set = io.normalized(&points)?;
            let circle = curve_arg(&curve, set.k)?;
            let (img, prov) = reduce_circle_to_line(&set, &circle, center)?;
            let mut out = String::new();
            for (i, p) in prov.iter().enumerate() {
                writeln!(out, "# image {i}: point {} ({:?})", p.source, p.role).expect("string write");
            }
            out.push_str(&write_point_set(&img));
            ok(out)
        }
        Command::SearchIntegral { n, bound, allow_degenerate } => {
            let cfg = SearchConfig { n_points: n, bound, general_position: !allow_degenerate };
            let sets = integral_search(&cfg)?;
            let mut out = format!("# {} congruence classes\n", sets.len());
            for s in &sets {
                let pts: Vec<String> = s.points.iter().map(|(x, y)| format!("({x},{y})")).collect();
                let ds: Vec<String> = s.distances.iter().map(|d| d.to_string()).collect();
                writeln!(out, "set {} distances {}", pts.join(" "), ds.join(" ")).expect("string write");
            }
            ok(out)
        }
        Command::IdentityCheck { trials, seed } => identity_check(trials, seed),
    }
}

/// Runs one command line; returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let mut io = Io { stdin };
    match execute(cli.command, &mut io) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
