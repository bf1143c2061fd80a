use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fractal_lie::basis::{enumerate_by_length, enumerate_by_weight, BasisKind, StandardMonomial, Variant};
use fractal_lie::gradings::{Component, Weighted};
use fractal_lie::growth::{
    degree_dimensions, diamond_blocks, diamond_sequence, empty_diagonals, find_tail_period, lattice_points,
    weight_dimensions, width_word,
};
use fractal_lie::hull::{enumerate_hull, enumeration_is_basis, hull_degree_dimensions, HullElement, HullMonomial};
use fractal_lie::operators::oracle_bracket_check;
use fractal_lie::verify::{
    self, all_suites, check_relations, just_infinite_closure, local_nilpotency_sample, non_nil_witness,
    not_hereditary_witness, not_thin_witness, AdNilpotence, Report, SuiteLimits,
};
use fractal_lie::{Element, PrimeField, Rationals};

#[derive(Parser)]
#[command(name = "fractal", version, about = "Computations in the fractal Lie superalgebra Lie(v0, v1) and its associative hull")]
struct Cli {
    /// Characteristic of the coefficient field: 0 or a prime.
    #[arg(long = "char", global = true, env = "FRACTAL_CHAR", default_value_t = 0)]
    characteristic: u64,
    /// lie, super, restricted or zform.
    #[arg(long, global = true, default_value = "super")]
    variant: Variant,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Standard monomials by length or weight.
    Basis {
        #[arg(long, conflicts_with = "max_weight")]
        max_length: Option<u32>,
        #[arg(long)]
        max_weight: Option<u64>,
    },
    /// Bracket of two elements, or the square of one.
    Bracket {
        u: String,
        w: Option<String>,
        #[arg(long)]
        square: bool,
        /// Also compare with operator composition on the first M Grassmann letters.
        #[arg(long, value_name = "M")]
        oracle: Option<u32>,
    },
    /// Weight, multidegree and component of each term.
    Weights { element: String },
    #[command(subcommand)]
    Growth(GrowthCmd),
    /// Coefficients of the Hilbert series by total degree.
    Hilbert(HilbertArgs),
    /// Dimensions of the degree components.
    Width(WidthArgs),
    /// Diamond sequence of the characteristic-2 Lie algebra.
    Diamonds(DiamondsArgs),
    /// Empty diagonal components R_{n,n}.
    Diagonals(DiagonalsArgs),
    #[command(subcommand)]
    Hull(HullCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Lattice points for plotting.
    Plotdata {
        #[arg(long, default_value_t = 256)]
        max_weight: u64,
        /// Basis monomials of the associative hull up to this length instead.
        #[arg(long, value_name = "LENGTH")]
        hull: Option<u32>,
    },
}

#[derive(Subcommand)]
enum GrowthCmd {
    /// γ(m): basis monomials of degree ≤ m.
    Ordinary {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
    /// γ̃(m): basis monomials of weight ≤ m.
    Weight {
        #[arg(long, default_value_t = 100)]
        max: u64,
    },
    /// γ_A(m) of the associative hull.
    Hull {
        #[arg(long, default_value_t = 64)]
        max: u64,
    },
    /// Coefficients of the Hilbert series by total degree.
    Hilbert(HilbertArgs),
    /// Dimensions of the degree components.
    Width(WidthArgs),
    /// Diamond sequence of the characteristic-2 Lie algebra.
    Diamonds(DiamondsArgs),
    /// Empty diagonal components R_{n,n}.
    Diagonals(DiagonalsArgs),
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long, default_value_t = 60)]
    max_degree: u64,
    /// Print the coefficients of the two-variable series instead.
    #[arg(long)]
    two_d: bool,
}

#[derive(Args)]
struct WidthArgs {
    #[arg(long, default_value_t = 100)]
    max: u64,
    /// Print the broken-line word after K substitutions instead.
    #[arg(long, value_name = "K")]
    word: Option<u32>,
}

#[derive(Args)]
struct DiamondsArgs {
    #[arg(long, default_value_t = 98)]
    terms: u64,
    /// Largest period tested on the second half; defaults to a third of the terms.
    #[arg(long)]
    max_period: Option<usize>,
}

#[derive(Args)]
struct DiagonalsArgs {
    #[arg(long, visible_alias = "max", default_value_t = 1001)]
    limit: u64,
}

#[derive(Subcommand)]
enum HullCmd {
    /// Basis monomials of one length.
    Basis {
        #[arg(long)]
        length: u32,
    },
    /// Product of two or more elements of the Lie superalgebra in the hull.
    Product {
        #[arg(num_args = 2.., required = true)]
        factors: Vec<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Pivot relations and general products.
    Relations {
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
    /// Nilpotence degree of ad(a) on basis probes.
    Adnil {
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 64)]
        probe_weight: u64,
    },
    /// Powers v^(2^k) of v = v_n + α x_n v_{n+1} (characteristic 2).
    Nonnil {
        #[arg(long, default_value_t = 0)]
        start: u32,
        #[arg(long, default_value_t = 1)]
        alpha: u64,
        #[arg(long, default_value_t = 10)]
        iterations: u32,
    },
    /// Nilpotency of the algebra generated inside one triangular component.
    Localnil {
        #[arg(long, value_enum)]
        component: ComponentArg,
        #[arg(required = true)]
        gens: Vec<String>,
    },
    /// Ideal generated by a seed, modulo lengths above the bound.
    Justinf {
        /// Seed element of the ideal.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        max_len: Option<u32>,
    },
    /// The abelian ideal x0 R(m) of R(m).
    Hereditary {
        #[arg(long, default_value_t = 1)]
        cutoff: u32,
        #[arg(long, default_value_t = 5)]
        extent: u32,
    },
    /// Failure of the covering property (characteristic 2, Lie variant).
    Notthin,
    /// Every suite for the session's characteristic and variant.
    All {
        /// Seed for the sampled elements.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ComponentArg {
    Plus,
    Zero,
    Minus,
}

impl From<ComponentArg> for Component {
    fn from(c: ComponentArg) -> Self {
        match c {
            ComponentArg::Plus => Component::Plus,
            ComponentArg::Zero => Component::Zero,
            ComponentArg::Minus => Component::Minus,
        }
    }
}

struct Session {
    characteristic: u64,
    variant: Variant,
    shape: BasisKind,
    format: Format,
}

/// Runs `$body` with `$r` bound to the session's coefficient field.
macro_rules! with_field {
    ($s:expr, |$r:ident| $body:expr) => {
        if $s.characteristic == 0 {
            let $r = Rationals::new();
            $body
        } else {
            let $r = PrimeField::new($s.characteristic)?;
            $body
        }
    };
}

#[derive(Serialize)]
struct Row {
    kind: String,
    length: u32,
    tail: String,
    wt: i128,
    swt: i128,
    x1: i128,
    x2: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    suffix: Option<String>,
    monomial: String,
}

impl Row {
    fn standard(s: &StandardMonomial) -> Self {
        let w = s.weight();
        let d = w.multidegree().expect("basis monomials have integral multidegree");
        Row {
            kind: s.kind.label().into(),
            length: s.length,
            tail: s.tail.to_string(),
            wt: w.z1,
            swt: w.z2,
            x1: d.x1,
            x2: d.x2,
            suffix: None,
            monomial: s.to_string(),
        }
    }

    fn hull(m: &HullMonomial) -> Self {
        let w = m.weight();
        let d = w.multidegree().expect("hull monomials have integral multidegree");
        let n = m.head();
        let suffix = (0..n).rev().map(|i| if m.heads >> i & 1 == 1 { '1' } else { '0' }).collect();
        Row {
            kind: "hull".into(),
            length: n,
            tail: m.tail.to_string(),
            wt: w.z1,
            swt: w.z2,
            x1: d.x1,
            x2: d.x2,
            suffix: Some(suffix),
            monomial: m.to_string(),
        }
    }

    fn csv(&self) -> String {
        let mut line = format!("{},{},{},{},{},{},{}", self.kind, self.length, self.tail, self.wt, self.swt, self.x1, self.x2);
        if let Some(s) = &self.suffix {
            line.push(',');
            line.push_str(s);
        }
        line
    }

    fn text(&self) -> String {
        format!(
            "{:<24} {:<6} length {:>2}  Wt ({}, {})  Gr ({}, {})",
            self.monomial, self.kind, self.length, self.wt, self.swt, self.x1, self.x2
        )
    }
}

const CSV_HEADER: &str = "kind,length,tail,wt,swt,x1,x2";

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn emit_rows(session: &Session, rows: &[Row], hull: bool) -> Result<()> {
    match session.format {
        Format::Json => print_json(&rows)?,
        Format::Csv => {
            println!("{CSV_HEADER}{}", if hull { ",suffix" } else { "" });
            for r in rows {
                println!("{}", r.csv());
            }
        }
        Format::Text => {
            for r in rows {
                println!("{}", r.text());
            }
        }
    }
    Ok(())
}

/// Two-column integer table.
fn emit_table(session: &Session, names: [&str; 2], rows: &[(u64, u64)]) -> Result<()> {
    match session.format {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(a, b)| serde_json::json!({ names[0]: a, names[1]: b })).collect();
            print_json(&v)?;
        }
        Format::Csv => {
            println!("{},{}", names[0], names[1]);
            for (a, b) in rows {
                println!("{a},{b}");
            }
        }
        Format::Text => {
            for (a, b) in rows {
                println!("{a:>6} {b}");
            }
        }
    }
    Ok(())
}

fn emit_reports(session: &Session, reports: &[Report]) -> Result<bool> {
    let passed = reports.iter().all(Report::passed);
    match session.format {
        Format::Json => print_json(&serde_json::json!({ "passed": passed, "reports": reports }))?,
        Format::Csv => {
            println!("suite,check,passed,detail");
            for r in reports {
                for c in &r.checks {
                    println!("{},{:?},{},{:?}", r.suite, c.name, c.passed, c.detail);
                }
            }
        }
        Format::Text => {
            for r in reports {
                print!("{r}");
            }
        }
    }
    Ok(passed)
}

/// Runs of three or more equal digits written as `d^k`.
fn compact(seq: &[u64]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < seq.len() {
        let j = (i..seq.len()).find(|&j| seq[j] != seq[i]).unwrap_or(seq.len());
        let k = j - i;
        if k >= 3 {
            out.push_str(&format!("{}^{k}", seq[i]));
        } else {
            for _ in 0..k {
                out.push_str(&seq[i].to_string());
            }
        }
        i = j;
    }
    out
}

fn join(seq: &[u64]) -> String {
    seq.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn run(cli: Cli) -> Result<bool> {
    let shape = BasisKind::resolve(cli.characteristic, cli.variant)?;
    if cli.characteristic != 0 {
        PrimeField::new(cli.characteristic)?;
    }
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring worker threads")?;
    }
    let s = Session { characteristic: cli.characteristic, variant: cli.variant, shape, format: cli.format };
    let command = match cli.command {
        Command::Growth(GrowthCmd::Hilbert(a)) => Command::Hilbert(a),
        Command::Growth(GrowthCmd::Width(a)) => Command::Width(a),
        Command::Growth(GrowthCmd::Diamonds(a)) => Command::Diamonds(a),
        Command::Growth(GrowthCmd::Diagonals(a)) => Command::Diagonals(a),
        c => c,
    };
    match command {
        Command::Basis { max_length, max_weight } => {
            let mons: Vec<StandardMonomial> = match (max_length, max_weight) {
                (_, Some(w)) => enumerate_by_weight(w, shape),
                (l, None) => (0..=l.unwrap_or(4)).flat_map(|n| enumerate_by_length(n, shape)).collect(),
            };
            let rows: Vec<Row> = mons.iter().map(Row::standard).collect();
            emit_rows(&s, &rows, false)?;
            Ok(true)
        }
        Command::Bracket { u, w, square, oracle } => with_field!(s, |ring| {
            let a = Element::parse(ring, &u)?;
            let result = match (square, &w) {
                (true, None) => a.square()?,
                (false, Some(w)) => a.bracket(&Element::parse(ring, w)?)?,
                (true, Some(_)) => bail!("--square takes a single element"),
                (false, None) => bail!("bracket needs two elements (or --square)"),
            };
            let agrees = match (oracle, &w) {
                (Some(m), Some(w)) => Some(oracle_bracket_check(&a, &Element::parse(ring, w)?, m)?),
                (Some(_), None) => bail!("--oracle applies to brackets only"),
                _ => None,
            };
            match s.format {
                Format::Json => print_json(&serde_json::json!({ "result": result.to_string(), "oracle": agrees }))?,
                _ => {
                    println!("{result}");
                    if let Some(ok) = agrees {
                        println!("oracle: {}", if ok { "agrees" } else { "DISAGREES" });
                    }
                }
            }
            Ok(agrees.unwrap_or(true))
        }),
        Command::Weights { element } => with_field!(s, |ring| {
            let e = Element::parse(ring, &element)?;
            #[derive(Serialize)]
            struct W {
                monomial: String,
                wt: i128,
                swt: i128,
                multidegree: Option<(i128, i128)>,
                component: Component,
                basis: Option<String>,
            }
            let rows: Vec<W> = e
                .monomials()
                .map(|m| {
                    let w = m.weight();
                    W {
                        monomial: m.to_string(),
                        wt: w.z1,
                        swt: w.z2,
                        multidegree: w.multidegree().ok().map(|d| (d.x1, d.x2)),
                        component: m.component(),
                        basis: StandardMonomial::classify_in(m, shape).map(|b| b.kind.label().to_string()),
                    }
                })
                .collect();
            match s.format {
                Format::Json => print_json(&rows)?,
                Format::Csv => {
                    println!("monomial,wt,swt,x1,x2,component,basis");
                    for r in &rows {
                        let (x1, x2) = r.multidegree.map(|(a, b)| (a.to_string(), b.to_string())).unwrap_or_default();
                        println!(
                            "{},{},{},{x1},{x2},{:?},{}",
                            r.monomial,
                            r.wt,
                            r.swt,
                            r.component,
                            r.basis.as_deref().unwrap_or("")
                        );
                    }
                }
                Format::Text => {
                    for r in &rows {
                        let gr = r.multidegree.map(|(a, b)| format!("({a}, {b})")).unwrap_or_else(|| "-".into());
                        println!(
                            "{:<20} Wt ({}, {})  Gr {gr}  {:?}  {}",
                            r.monomial,
                            r.wt,
                            r.swt,
                            r.component,
                            r.basis.as_deref().unwrap_or("not a basis monomial")
                        );
                    }
                }
            }
            Ok(true)
        }),
        Command::Growth(g) => {
            let cumulative = |dims: &[u64]| -> Vec<(u64, u64)> {
                dims.iter()
                    .scan(0u64, |acc, d| {
                        *acc += d;
                        Some(*acc)
                    })
                    .enumerate()
                    .map(|(i, c)| (i as u64 + 1, c))
                    .collect()
            };
            match g {
                GrowthCmd::Ordinary { max } => emit_table(&s, ["m", "gamma"], &cumulative(&degree_dimensions(max, shape)[1..]))?,
                GrowthCmd::Weight { max } => emit_table(&s, ["m", "gamma_weight"], &cumulative(&weight_dimensions(max, shape)))?,
                GrowthCmd::Hull { max } => {
                    if !enumeration_is_basis(s.characteristic) {
                        eprintln!("note: in characteristic 2 the hull enumeration is a spanning set, possibly dependent");
                    }
                    emit_table(&s, ["m", "gamma_hull"], &cumulative(&hull_degree_dimensions(max)[1..]))?
                }
                GrowthCmd::Hilbert(_) | GrowthCmd::Width(_) | GrowthCmd::Diamonds(_) | GrowthCmd::Diagonals(_) => {
                    unreachable!("forwarded above")
                }
            }
            Ok(true)
        }
        Command::Hilbert(HilbertArgs { max_degree, two_d }) => {
            if two_d {
                let h = lattice_points(max_degree, shape);
                match s.format {
                    Format::Json => {
                        let v: Vec<_> =
                            h.coeffs.iter().map(|(d, c)| serde_json::json!({"n1": d.x1, "n2": d.x2, "coeff": c})).collect();
                        print_json(&v)?;
                    }
                    _ => {
                        if s.format == Format::Csv {
                            println!("n1,n2,coeff");
                        }
                        for (d, c) in &h.coeffs {
                            println!("{},{},{c}", d.x1, d.x2);
                        }
                    }
                }
            } else {
                let dims = degree_dimensions(max_degree, shape);
                let rows: Vec<(u64, u64)> = (1..=max_degree).map(|n| (n, dims[n as usize])).collect();
                if s.format == Format::Text {
                    let terms: Vec<String> = rows.iter().map(|(n, c)| format!("{c}t^{n}")).collect();
                    println!("{}", terms.join(" + "));
                } else {
                    emit_table(&s, ["n", "dim"], &rows)?;
                }
            }
            Ok(true)
        }
        Command::Width(WidthArgs { max, word }) => {
            if let Some(k) = word {
                let w = width_word(k);
                match s.format {
                    Format::Json => print_json(&serde_json::json!({ "levels": k, "word": w.to_string(), "len": w.len() }))?,
                    _ => println!("{w}"),
                }
                return Ok(true);
            }
            let dims = degree_dimensions(max, shape)[1..].to_vec();
            let width = dims.iter().copied().max().unwrap_or(0);
            match s.format {
                Format::Json => print_json(&serde_json::json!({ "dims": dims, "width": width }))?,
                Format::Csv => emit_table(&s, ["n", "dim"], &dims.iter().enumerate().map(|(i, d)| (i as u64 + 1, *d)).collect::<Vec<_>>())?,
                Format::Text => {
                    println!("{}", join(&dims));
                    println!("width {width}");
                }
            }
            Ok(true)
        }
        Command::Diamonds(DiamondsArgs { terms, max_period }) => {
            let seq = diamond_sequence(terms);
            let blocks = diamond_blocks(&seq);
            let max_period = max_period.unwrap_or(seq.len() / 3);
            let period = find_tail_period(&seq, max_period);
            match s.format {
                Format::Json => print_json(&serde_json::json!({
                    "sequence": seq,
                    "compact": compact(&seq),
                    "blocks": blocks.as_ref().ok(),
                    "broken_at": blocks.as_ref().err(),
                    "tail_period": period,
                    "max_period": max_period,
                }))?,
                _ => {
                    println!("{}", compact(&seq));
                    match &blocks {
                        Ok(b) => println!("blocks 112 / 11222 from position 5: {} blocks", b.len()),
                        Err(i) => println!("block pattern breaks at position {i}"),
                    }
                    match period {
                        Some(p) => println!("second half has period {p}"),
                        None => println!("no period ≤ {max_period} found in the second half"),
                    }
                }
            }
            Ok(blocks.is_ok())
        }
        Command::Diagonals(DiagonalsArgs { limit }) => {
            let d = empty_diagonals(limit);
            match s.format {
                Format::Json => print_json(&serde_json::json!({ "limit": limit, "count": d.len(), "diagonals": d }))?,
                Format::Csv => {
                    println!("n");
                    for n in &d {
                        println!("{n}");
                    }
                }
                Format::Text => {
                    println!("{}", join(&d));
                    println!("{} empty diagonals up to {limit}", d.len());
                }
            }
            Ok(true)
        }
        Command::Hull(HullCmd::Basis { length }) => {
            if length > 12 {
                bail!("hull lengths above 12 are not listed");
            }
            if !enumeration_is_basis(s.characteristic) {
                eprintln!("note: in characteristic 2 this list spans the hull but may be dependent");
            }
            let rows: Vec<Row> = enumerate_hull(length).iter().map(Row::hull).collect();
            emit_rows(&s, &rows, true)?;
            Ok(true)
        }
        Command::Hull(HullCmd::Product { factors }) => with_field!(s, |ring| {
            let mut acc: Option<HullElement<_>> = None;
            for f in &factors {
                let e = HullElement::from_element(&Element::parse(ring, f)?);
                acc = Some(match acc {
                    None => e,
                    Some(a) => a.mul(&e)?,
                });
            }
            let p = acc.ok_or_else(|| anyhow!("no factors"))?;
            match s.format {
                Format::Json => print_json(&serde_json::json!({ "result": p.to_string() }))?,
                _ => println!("{p}"),
            }
            Ok(true)
        }),
        Command::Verify(v) => run_verify(&s, v),
        Command::Plotdata { max_weight, hull } => {
            let rows: Vec<Row> = match hull {
                Some(n) => (0..=n.min(12)).flat_map(enumerate_hull).map(|m| Row::hull(&m)).collect(),
                None => enumerate_by_weight(max_weight, shape).iter().map(Row::standard).collect(),
            };
            let s = Session { format: if s.format == Format::Text { Format::Csv } else { s.format }, ..s };
            emit_rows(&s, &rows, hull.is_some())?;
            Ok(true)
        }
    }
}

fn index<T: std::fmt::Display>(i: Option<T>) -> String {
    i.map_or_else(|| "beyond the bound".into(), |k| k.to_string())
}

fn run_verify(s: &Session, v: VerifyCmd) -> Result<bool> {
    let shape = s.shape;
    let reports: Vec<Report> = match v {
        VerifyCmd::Relations { max } => with_field!(s, |ring| vec![check_relations(ring, max)]),
        VerifyCmd::Adnil { element, probe_weight } => with_field!(s, |ring| {
            let a = Element::parse(ring, &element)?;
            let mut r = Report::new("ad-nilpotence");
            match verify::ad_nilpotence_degree(&a, probe_weight, shape)? {
                AdNilpotence::Nilpotent { degree, bound } => {
                    r.push(format!("ad({a})"), true, format!("degree {degree} ≤ bound {bound} on probes of weight ≤ {probe_weight}"))
                }
                AdNilpotence::NotFoundBelow(b) => r.push(format!("ad({a})"), false, format!("probes survive {b} steps")),
            }
            vec![r]
        }),
        VerifyCmd::Nonnil { start, alpha, iterations } => {
            let f = PrimeField::new(if s.characteristic == 0 { 0 } else { s.characteristic })
                .map_err(|_| anyhow!("the non-nil witness needs --char 2"))?;
            let seq = non_nil_witness(f, start, alpha, iterations)?;
            let mut r = Report::new("non-nil");
            for (k, e) in seq.iter().enumerate() {
                r.push(format!("v^(2^{k})"), !e.is_zero(), e.to_string());
            }
            vec![r]
        }
        VerifyCmd::Localnil { component, gens } => with_field!(s, |ring| {
            let gens: Vec<Element<_>> =
                gens.iter().map(|g| Element::parse(ring, g)).collect::<Result<_, _>>()?;
            let out = local_nilpotency_sample(component.into(), &gens)?;
            let mut r = Report::new("local-nilpotency");
            r.push(
                format!("{:?} {{{}}}", out.component, out.generators.join(", ")),
                out.passed(),
                format!(
                    "Lie products vanish from length {} (bound {}), associative from {} (bound {})",
                    index(out.lie_index),
                    out.lie_bound,
                    index(out.assoc_index),
                    out.assoc_bound
                ),
            );
            vec![r]
        }),
        VerifyCmd::Justinf { seed, max_len } => with_field!(s, |ring| {
            let e = Element::parse(ring, &seed)?;
            let n = e.max_head().unwrap_or(0);
            let out = just_infinite_closure(&e, max_len.unwrap_or(n + 8), shape)?;
            if s.format == Format::Json {
                print_json(&out)?;
                return Ok(out.saturated);
            }
            let mut r = Report::new("just-infinite");
            r.push(
                format!("ideal of {}", out.seed),
                out.saturated,
                format!(
                    "all lengths {}..={} reached, codimension {} within length {}",
                    out.stable_length, out.max_len, out.codim, out.max_len
                ),
            );
            vec![r]
        }),
        VerifyCmd::Hereditary { cutoff, extent } => {
            with_field!(s, |ring| vec![not_hereditary_witness(ring, shape, cutoff, extent)?])
        }
        VerifyCmd::Notthin => {
            if s.characteristic != 2 || s.variant != Variant::Lie {
                bail!("the not-thin witness needs --char 2 --variant lie");
            }
            vec![not_thin_witness()]
        }
        VerifyCmd::All { seed } => {
            let limits = SuiteLimits { seed, ..SuiteLimits::default() };
            with_field!(s, |ring| all_suites(ring, shape, limits))
        }
    };
    emit_reports(s, &reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
