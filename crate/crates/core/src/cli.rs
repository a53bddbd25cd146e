//! Command-line front end: `polytope`, `weyl` and `verify` command groups.
//!
//! Reports are plain `key: value` lines with exact integers and `p/q`
//! rationals. Exit codes: 0 success, 1 failed check, 2 bad input.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use crate::characters::{
    multiply_g, quantum_dh_check, verify_product_orbits, verify_vergne, GCharacter,
};
use crate::counting::{
    brion_evaluate, count_points, ehrhart_fit, lattice_points, localized_vertex_multiplicity,
    monomial, polytope_dim, reciprocity_check, required_samples, toric_rr, vertex_denominator_lcm,
    Region,
};
use crate::desingularize::{canonical_desingularization, shift_desingularization, Shift};
use crate::error::Error;
use crate::lattice::{Rational, RationalVector};
use crate::polyhedra::format::{parse_rational, read_lpoly, read_subdivision, write_lpoly};
use crate::polyhedra::{minimalize, structure_group_order, ExcessDecomposition, FaceLattice, LabelledPolyhedron};
use crate::random;
use crate::roots::{dual_support_bound, format_weight, principal_wall, RootSystem, RootType, Wall};
use crate::subdivision::{
    dual_subdivision, euler_check, glue_count_check, is_admissible, validate, Coverage, Subdivision,
};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Error),
    #[error(transparent)]
    Output(#[from] io::Error),
}

type CliResult = std::result::Result<bool, CliError>;

#[derive(Parser, Debug)]
#[command(name = "delzant", version, about = "Exact labelled polyhedra, lattice points and Weyl characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Operations on a labelled polyhedron read from an `.lpoly` file.
    #[command(subcommand)]
    Polytope(PolytopeCmd),
    /// Weyl groups, the ρ-shifted action and walls.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Checks of the multiplicity and subdivision identities.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args, Debug)]
struct InFile {
    /// Input `.lpoly` file.
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct TypeArg {
    /// Root system: A1, A2, A3, B2 or G2.
    #[arg(long = "type", value_name = "TYPE")]
    root_type: RootType,
}

#[derive(Subcommand, Debug)]
enum PolytopeCmd {
    /// Open faces with dimension and excess.
    Faces(InFile),
    /// Excess decomposition and depth.
    Excess(InFile),
    /// Canonical desingularization.
    Desing(InFile),
    /// Shift desingularization (automatic unless `--eta` is given).
    Shift {
        #[command(flatten)]
        file: InFile,
        /// Shift vector, one rational per label.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Number of lattice points of mP.
    Count {
        #[command(flatten)]
        file: InFile,
        #[arg(short = 'm', default_value_t = 1)]
        m: i64,
        /// Count the relative interior instead.
        #[arg(long)]
        interior: bool,
    },
    /// Toric Riemann–Roch character of the m-th power.
    Rr {
        #[command(flatten)]
        file: InFile,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: i64,
    },
    /// Ehrhart quasi-polynomial fitted from exact counts.
    Ehrhart {
        #[command(flatten)]
        file: InFile,
        /// Largest dilation counted (defaults to the minimum that certifies the fit).
        #[arg(long)]
        mmax: Option<i64>,
    },
    /// Compare the fitted count at −m with signed interior counts.
    Reciprocity {
        #[command(flatten)]
        file: InFile,
        #[arg(long, default_value_t = 6)]
        mmax: i64,
    },
    /// Vertex-cone sum at a rational point, against enumeration.
    Brion {
        #[command(flatten)]
        file: InFile,
        /// Evaluation point, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Drop labels whose hyperplanes miss the polyhedron.
    Minimalize(InFile),
    /// Structure group orders of the faces.
    Orders(InFile),
}

#[derive(Subcommand, Debug)]
enum WeylCmd {
    /// Elements of the Weyl group with lengths and reduced words.
    Group(TypeArg),
    /// `w ⊙ μ` for the word `--word` in simple reflections.
    Action {
        #[command(flatten)]
        ty: TypeArg,
        /// Reflection indices, 1-based, applied right to left.
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Signed dominant representative of a weight, or 0.
    Induce {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// `−w₀ μ`.
    Star {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// `w ⊙ (−λ)` for dominant λ, with the four reflection conditions.
    Reflect {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Wall of a dominant weight with its ρ_σ and w_σ.
    Wall {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Principal wall of a polytope, and optionally the dual support bound at `--mu`.
    Principal {
        #[command(flatten)]
        ty: TypeArg,
        #[command(flatten)]
        file: InFile,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Lattice-count gluing identity for a polytope and a subdivision file.
    Glue {
        #[arg(long, value_name = "FILE")]
        delta: PathBuf,
        #[arg(long, value_name = "FILE")]
        subdivision: PathBuf,
    },
    /// Pointwise Euler identity for a dual subdivision or a subdivision file.
    Euler {
        #[arg(long = "type", value_name = "TYPE")]
        root_type: Option<RootType>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_name = "FILE")]
        subdivision: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build and check the subdivision dual to the walls.
    DualSubdivision {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The inverse prequantum bundle of the orbit through 2ρ in type A1.
    Vergne,
    /// Tensor products; in type A1 without weights, every pair up to 6.
    ClebschGordan {
        #[arg(long = "type", value_name = "TYPE", default_value = "A1")]
        root_type: RootType,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Quasi-polynomiality of dilation counts and of the ray through `--mu`.
    QuantumDh {
        #[command(flatten)]
        file: InFile,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, default_value_t = 12)]
        mmax: i64,
    },
    /// Localized vertex multiplicity is one for seeded polytopes and directions.
    Genus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Polytope(cmd) => polytope(cmd, out),
        Command::Weyl(cmd) => weyl(cmd, out),
        Command::Verify(cmd) => verify(cmd, out),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn read_text(path: &Path) -> std::result::Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

fn load(path: &Path) -> std::result::Result<LabelledPolyhedron, CliError> {
    read_lpoly(&read_text(path)?).map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

fn load_subdivision(path: &Path) -> std::result::Result<Subdivision, CliError> {
    let cells = read_subdivision(&read_text(path)?)
        .map_err(|source| CliError::Input { path: path.display().to_string(), source })?;
    let dim = cells.first().map(LabelledPolyhedron::dim).ok_or_else(|| {
        CliError::Input { path: path.display().to_string(), source: Error::Invalid("no cells".into()) }
    })?;
    Ok(Subdivision::new(dim, cells)?)
}

fn parse_ints(s: &str) -> std::result::Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad integer '{}'", t.trim()))))
        .collect()
}

fn parse_rationals(s: &str) -> std::result::Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| parse_rational(t).ok_or_else(|| CliError::Usage(format!("bad rational '{}'", t.trim()))))
        .collect()
}

fn csv(v: &RationalVector) -> String {
    v.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// 1-based label numbers, `-` when empty.
fn label_set(tight: &[usize]) -> String {
    if tight.is_empty() {
        return "-".into();
    }
    tight.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn word(w: &[usize]) -> String {
    label_set(w)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn polytope(cmd: PolytopeCmd, out: &mut dyn Write) -> CliResult {
    match cmd {
        PolytopeCmd::Faces(f) => {
            let l = FaceLattice::new(&load(&f.input)?)?;
            let top = l.top().map_or(0, |t| l.faces()[t].dim);
            let fvec: Vec<String> =
                (0..=top).map(|d| l.faces().iter().filter(|f| f.dim == d).count().to_string()).collect();
            writeln!(out, "faces: {}", l.len())?;
            writeln!(out, "f-vector: {}", fvec.join(" "))?;
            for (i, face) in l.faces().iter().enumerate() {
                writeln!(
                    out,
                    "face: tight={} dim={} excess={} bounded={} sample={}",
                    label_set(&face.tight),
                    face.dim,
                    l.excess(i),
                    yes(face.is_bounded),
                    csv(&face.sample)
                )?;
            }
        }
        PolytopeCmd::Excess(f) => {
            let l = FaceLattice::new(&load(&f.input)?)?;
            if l.is_empty() {
                return Err(Error::EmptyPolyhedron.into());
            }
            let dec = ExcessDecomposition::new(&l);
            writeln!(out, "pieces: {}", dec.len())?;
            writeln!(out, "depth: {}", dec.depth())?;
            writeln!(out, "constant: {}", yes(dec.is_constant()))?;
            for (a, piece) in dec.pieces.iter().enumerate() {
                let closure = piece.closure_face.map_or("none".to_string(), |f| label_set(&l.faces()[f].tight));
                writeln!(
                    out,
                    "piece: excess={} faces={} depth={} closed={} closure={}",
                    piece.excess,
                    piece.faces.len(),
                    dec.piece_depth(a),
                    yes(dec.is_closed(a)),
                    closure
                )?;
            }
        }
        PolytopeCmd::Desing(f) => {
            let trace = canonical_desingularization(&load(&f.input)?)?;
            writeln!(out, "# steps: {}", trace.steps.len())?;
            for s in &trace.steps {
                writeln!(out, "# step: label {} epsilon={} target={}", s.added, s.epsilon, label_set(&s.target))?;
            }
            write!(out, "{}", write_lpoly(&trace.result))?;
        }
        PolytopeCmd::Shift { file, eta } => {
            let p = load(&file.input)?;
            let shift = match eta {
                Some(s) => Shift::Explicit(parse_rationals(&s)?),
                None => Shift::Auto,
            };
            let s = shift_desingularization(&p, &shift)?;
            let eta: Vec<String> =
                s.labels().iter().zip(p.labels()).map(|(a, b)| (&a.r - &b.r).to_string()).collect();
            writeln!(out, "# eta: {}", eta.join(","))?;
            write!(out, "{}", write_lpoly(&s))?;
        }
        PolytopeCmd::Count { file, m, interior } => {
            let region = if interior { Region::Interior } else { Region::Closed };
            writeln!(out, "{}", count_points(&load(&file.input)?, m, region)?)?;
        }
        PolytopeCmd::Rr { file, m } => {
            write!(out, "{}", toric_rr(&load(&file.input)?, m)?)?;
        }
        PolytopeCmd::Ehrhart { file, mmax } => {
            let p = load(&file.input)?;
            let mmax = match mmax {
                Some(m) => m,
                None => required_samples(polytope_dim(&p)?, vertex_denominator_lcm(&p)?),
            };
            write!(out, "{}", ehrhart_fit(&p, mmax)?)?;
        }
        PolytopeCmd::Reciprocity { file, mmax } => {
            let r = reciprocity_check(&load(&file.input)?, mmax)?;
            write!(out, "{}", r.quasi_polynomial)?;
            for row in &r.rows {
                writeln!(out, "m={} fitted={} counted={} {}", row.m, row.fitted, row.counted, verdict(row.holds()))?;
            }
            writeln!(out, "reciprocity: {}", verdict(r.holds()))?;
            return Ok(r.holds());
        }
        PolytopeCmd::Brion { file, z } => {
            let p = load(&file.input)?;
            let z = parse_rationals(&z)?;
            let value = brion_evaluate(&p, &z)?;
            let mut enumerated = Rational::from_integer(0.into());
            for x in lattice_points(&p, 1, Region::Closed)? {
                let e: Vec<BigInt> = x.into_iter().map(BigInt::from).collect();
                enumerated += monomial(&z, &e)?;
            }
            writeln!(out, "brion: {value}")?;
            writeln!(out, "enumerated: {enumerated}")?;
            writeln!(out, "agree: {}", yes(value == enumerated))?;
            return Ok(value == enumerated);
        }
        PolytopeCmd::Minimalize(f) => {
            write!(out, "{}", write_lpoly(&minimalize(&load(&f.input)?)?))?;
        }
        PolytopeCmd::Orders(f) => {
            let l = FaceLattice::new(&load(&f.input)?)?;
            for (i, face) in l.faces().iter().enumerate() {
                let value = match structure_group_order(&l, i) {
                    Ok(n) => n.to_string(),
                    Err(Error::PositiveDimensionalKernel) => "none".to_string(),
                    Err(e) => return Err(e.into()),
                };
                writeln!(out, "order: tight={} dim={} value={value}", label_set(&face.tight), face.dim)?;
            }
        }
    }
    Ok(true)
}

fn weight_arg(r: &RootSystem, s: &str) -> std::result::Result<Vec<i64>, CliError> {
    let mu = parse_ints(s)?;
    r.check_weight(&mu)?;
    Ok(mu)
}

fn weyl(cmd: WeylCmd, out: &mut dyn Write) -> CliResult {
    match cmd {
        WeylCmd::Group(t) => {
            let r = RootSystem::new(t.root_type);
            writeln!(out, "type: {}", r.root_type)?;
            writeln!(out, "order: {}", r.order())?;
            writeln!(out, "longest: {}", r.longest().length)?;
            for w in &r.elements {
                let rows: Vec<String> = w.matrix.iter().map(|row| format_weight(row)).collect();
                writeln!(out, "element: length={} word={} matrix={}", w.length, word(&w.word), rows.join(";"))?;
            }
        }
        WeylCmd::Action { ty, word: letters, mu } => {
            let r = RootSystem::new(ty.root_type);
            let mu = weight_arg(&r, &mu)?;
            let mut result = mu;
            let letters = if letters.trim().is_empty() { Vec::new() } else { parse_ints(&letters)? };
            for &i in letters.iter().rev() {
                if i < 1 || i as usize > r.rank {
                    return Err(CliError::Usage(format!("no simple reflection {i}")));
                }
                // the reflection s_i is the length-one element with word [i]
                let s = r
                    .elements
                    .iter()
                    .find(|w| w.word == [i as usize - 1])
                    .expect("simple reflections are group elements");
                result = r.affine_action(s, &result);
            }
            writeln!(out, "{}", format_weight(&result))?;
        }
        WeylCmd::Induce { ty, mu } => {
            let r = RootSystem::new(ty.root_type);
            match r.induce(&weight_arg(&r, &mu)?) {
                None => writeln!(out, "0")?,
                Some((sign, nu)) => {
                    let mut g = GCharacter::new();
                    g.add_term(nu, sign)?;
                    write!(out, "{g}")?;
                }
            }
        }
        WeylCmd::Star { ty, mu } => {
            let r = RootSystem::new(ty.root_type);
            writeln!(out, "{}", format_weight(&r.star(&weight_arg(&r, &mu)?)))?;
        }
        WeylCmd::Reflect { ty, mu } => {
            let r = RootSystem::new(ty.root_type);
            let lambda = weight_arg(&r, &mu)?;
            let c = r.reflect_conditions(&lambda)?;
            writeln!(out, "conditions: {} {} {} {}", c[0], c[1], c[2], c[3])?;
            match r.reflect(&lambda)? {
                None => writeln!(out, "result: none")?,
                Some((w, nu)) => {
                    writeln!(out, "w: {}", word(&r.elements[w].word))?;
                    writeln!(out, "result: {}", format_weight(&nu))?;
                }
            }
            return Ok(c.iter().all(|&x| x == c[0]));
        }
        WeylCmd::Wall { ty, mu } => {
            let r = RootSystem::new(ty.root_type);
            let mu = weight_arg(&r, &mu)?;
            if !RootSystem::is_dominant(&mu) {
                return Err(Error::NotDominant(format_weight(&mu)).into());
            }
            let wall = Wall::of_weight(&mu);
            let rho_sigma = r.rho_sigma(&wall);
            let diff = &RationalVector::from_ints(&r.rho()) - &rho_sigma;
            writeln!(out, "wall: {wall}")?;
            writeln!(out, "rho_sigma: {}", csv(&rho_sigma))?;
            writeln!(out, "rho_minus_rho_sigma: {}", csv(&diff))?;
            writeln!(out, "w_sigma: {}", word(&r.elements[r.w_sigma(&wall)].word))?;
        }
        WeylCmd::Principal { ty, file, mu } => {
            let r = RootSystem::new(ty.root_type);
            let delta = load(&file.input)?;
            let l = FaceLattice::new(&delta)?;
            if l.is_empty() {
                return Err(Error::EmptyPolyhedron.into());
            }
            writeln!(out, "principal: {}", principal_wall(&l.generators().points)?)?;
            if let Some(nu) = mu {
                let inside = dual_support_bound(&r, &delta, &weight_arg(&r, &nu)?)?;
                writeln!(out, "dual_support: {inside}")?;
            }
        }
    }
    Ok(true)
}

fn verify(cmd: VerifyCmd, out: &mut dyn Write) -> CliResult {
    match cmd {
        VerifyCmd::Glue { delta, subdivision } => {
            let d = load(&delta)?;
            let s = load_subdivision(&subdivision)?;
            let admissible = is_admissible(&s, &d)?;
            writeln!(out, "cells: {}", s.len())?;
            writeln!(out, "admissible: {}", yes(admissible))?;
            let r = glue_count_check(&d, &s)?;
            writeln!(out, "total: {}", r.total)?;
            writeln!(out, "alternating: {}", r.alternating)?;
            writeln!(out, "characters: {}", if r.characters_agree { "agree" } else { "differ" })?;
            let ok = admissible && r.holds();
            writeln!(out, "glue: {}", verdict(ok))?;
            return Ok(ok);
        }
        VerifyCmd::Euler { root_type, lambda, subdivision, samples, seed } => {
            let s = match (root_type, lambda, subdivision) {
                (_, _, Some(path)) => load_subdivision(&path)?,
                (Some(t), Some(lambda), None) => {
                    let r = RootSystem::new(t);
                    dual_subdivision(&r, &RationalVector(parse_rationals(&lambda)?))?.subdivision()?
                }
                _ => return Err(CliError::Usage("give --subdivision, or --type with --lambda".into())),
            };
            let e = euler_check(&s, samples, seed);
            writeln!(out, "cells: {}", s.len())?;
            writeln!(out, "points: {}", e.points)?;
            for (p, sum) in &e.failures {
                writeln!(out, "failure: point={} sum={sum}", csv(p))?;
            }
            writeln!(out, "euler: {}", verdict(e.holds()))?;
            return Ok(e.holds());
        }
        VerifyCmd::DualSubdivision { ty, lambda, samples, seed } => {
            let r = RootSystem::new(ty.root_type);
            let d = dual_subdivision(&r, &RationalVector(parse_rationals(&lambda)?))?;
            let s = d.subdivision()?;
            for (i, c) in d.cells.iter().enumerate() {
                writeln!(out, "cell: sigma={} tau={} codim={}", c.sigma, c.tau, s.codim(i))?;
            }
            let valid = validate(&s, Coverage::AllSpace)?.is_valid();
            let codim = d.codimension_violations()?.is_empty();
            let meets = d.intersection_violations()?.is_empty();
            let euler = euler_check(&s, samples, seed).holds();
            writeln!(out, "cells: {}", s.len())?;
            writeln!(out, "valid: {}", yes(valid))?;
            writeln!(out, "codimension: {}", verdict(codim))?;
            writeln!(out, "intersections: {}", verdict(meets))?;
            writeln!(out, "euler: {}", verdict(euler))?;
            return Ok(valid && codim && meets && euler);
        }
        VerifyCmd::Vergne => {
            let r = verify_vergne()?;
            let line = |c: &dyn std::fmt::Display| c.to_string().trim_end().replace('\n', "; ");
            writeln!(out, "toric: {}", line(&r.toric_character))?;
            writeln!(out, "toric_total: {}", r.toric_total)?;
            writeln!(out, "transported: {}", line(&r.transported))?;
            writeln!(out, "from_toric: {}", line(&r.from_toric))?;
            writeln!(out, "from_induction: {}", line(&r.from_induction))?;
            writeln!(out, "from_reflection: {}", line(&r.from_reflection))?;
            writeln!(out, "conclusion: -chi_0")?;
            writeln!(out, "vergne: {}", verdict(r.passed()))?;
            return Ok(r.passed());
        }
        VerifyCmd::ClebschGordan { root_type, mu, nu } => {
            let r = RootSystem::new(root_type);
            match (mu, nu) {
                (Some(mu), Some(nu)) => {
                    let (a, b) = (weight_arg(&r, &mu)?, weight_arg(&r, &nu)?);
                    let product =
                        multiply_g(&r, &GCharacter::irreducible(a.clone())?, &GCharacter::irreducible(b.clone())?)?;
                    write!(out, "{product}")?;
                    if root_type == RootType::A1 {
                        let rep = verify_product_orbits(a[0], b[0])?;
                        writeln!(out, "clebsch-gordan: {}", verdict(rep.passed()))?;
                        return Ok(rep.passed());
                    }
                }
                (None, None) if root_type == RootType::A1 => {
                    let mut all = true;
                    for l in 0..=6 {
                        for n in 0..=6 {
                            let rep = verify_product_orbits(l, n)?;
                            if !rep.passed() {
                                writeln!(out, "failure: lambda={l} nu={n}")?;
                            }
                            all &= rep.passed();
                        }
                    }
                    writeln!(out, "pairs: 49")?;
                    writeln!(out, "clebsch-gordan: {}", verdict(all))?;
                    return Ok(all);
                }
                _ => return Err(CliError::Usage("give both --mu and --nu".into())),
            }
        }
        VerifyCmd::QuantumDh { file, mu, mmax } => {
            let p = load(&file.input)?;
            let mu = match mu {
                Some(s) => parse_ints(&s)?,
                None => vec![0; p.dim()],
            };
            let r = quantum_dh_check(&p, &mu, mmax)?;
            write!(out, "{}", r.quasi_polynomial)?;
            writeln!(out, "l: {}", r.l)?;
            writeln!(out, "ray_degree: {}", r.ray.degree)?;
            writeln!(out, "ray_period: {}", r.ray.period)?;
            writeln!(out, "degree_bound: {}", verdict(r.degree_ok()))?;
            writeln!(out, "period_divides_l: {}", verdict(r.period_ok()))?;
            writeln!(out, "reproduces_counts: {}", verdict(r.reproduces_counts))?;
            writeln!(out, "quantum-dh: {}", verdict(r.passed()))?;
            return Ok(r.passed());
        }
        VerifyCmd::Genus { seed, count } => {
            let mut rng = random::rng(seed);
            let mut ones = 0;
            for i in 0..count {
                let p = random::lattice_polytope(&mut rng, 1 + i % 3)?;
                let xi = random::generic_direction(&mut rng, &p)?;
                let (vertex, n) = localized_vertex_multiplicity(&p, 1, &xi)?;
                writeln!(out, "pair: dim={} xi={} vertex={} count={n}", p.dim(), format_weight(&xi), csv(&vertex))?;
                if n == 1 {
                    ones += 1;
                }
            }
            writeln!(out, "pairs: {count}")?;
            writeln!(out, "multiplicity_one: {ones}")?;
            let ok = ones == count;
            writeln!(out, "genus: {}", verdict(ok))?;
            return Ok(ok);
        }
    }
    Ok(true)
}
