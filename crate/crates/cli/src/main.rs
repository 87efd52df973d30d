//! `linrec`: evaluate and combine linearly recursive sequences from JSON descriptors.

mod render;

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use linrec::kseq::{self, k_delta, k_impulse, k_reverse_term, sep_product, sep_sum};
use linrec::reversal::{decompose, reverse};
use linrec::wire::{Descriptor, RingJson};
use linrec::{BiRecSeq, Error, KSeq, LinRecSeq, Poly, RingSpec, Value};
use render::{pretty, series, Format, Row};
use serde_json::{json, Value as Json};

#[derive(Parser)]
#[command(name = "linrec", version, about = "Exact arithmetic on linearly recursive sequences over Z and Z/m")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Reinterpret every descriptor over this ring (`Z`, `Z/m` or `mod:m`).
    #[arg(long, global = true)]
    ring: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Terms from..=to of one or more sequences (one table row each).
    Eval {
        /// Descriptor files; `-` reads standard input.
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// Hadamard product, Hurwitz product or termwise sum of two sequences.
    Combine {
        #[arg(value_enum)]
        op: CombineOp,
        a: String,
        b: String,
        /// Print only the characteristic polynomial.
        #[arg(long)]
        charpoly_only: bool,
        /// Name for the combined sequence.
        #[arg(long)]
        name: Option<String>,
    },
    /// Terms of the bisequence extending a sequence with reversible characteristic polynomial.
    Reverse {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
    /// Split a monic polynomial as x^d q with q reversible (requires --ring).
    Split { poly: String },
    /// Degenerating plus reversible decomposition over Z/m.
    Decompose { input: String },
    /// Preperiod and period over Z/m.
    Period { input: String },
    /// Whether a polynomial annihilates a sequence.
    Annihilates { poly: String, input: String },
    /// The comultiplication as a list of descriptor pairs.
    Delta { input: String },
    /// k-dimensional sequences.
    Kseq {
        #[command(subcommand)]
        command: KCommand,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CombineOp {
    Hadamard,
    Hurwitz,
    Sum,
}

#[derive(Subcommand)]
enum KCommand {
    /// Values on the box 0..=to (per axis) or at a single point.
    Eval {
        input: String,
        /// Upper corner, comma separated.
        #[arg(long, conflicts_with = "at")]
        to: Option<String>,
        /// A single multi-index, comma separated.
        #[arg(long)]
        at: Option<String>,
    },
    /// The impulse sequence e_t for the given axis polynomials.
    Impulse {
        /// One axis polynomial per occurrence, e.g. `--elem x^2-x-1`.
        #[arg(long = "elem", required = true, allow_hyphen_values = true)]
        elem: Vec<String>,
        /// Position of the impulse in the polyhedron, comma separated.
        #[arg(long)]
        t: String,
    },
    /// n -> u_1(n_1) + ... + u_k(n_k).
    SepSum {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// n -> u_1(n_1) ... u_k(n_k).
    SepProduct {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// The k-dimensional comultiplication.
    Delta { input: String },
    /// Values of the birecursive extension at signed multi-indices.
    Reverse {
        input: String,
        /// A single signed multi-index, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Lower corner of a box, applied to every axis.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        /// Upper corner of a box, applied to every axis.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
    },
}

enum Failure {
    Parse(String),
    Domain(String),
    Unsupported(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Unsupported(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Domain(m) | Failure::Unsupported(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            Error::UnsupportedRing { .. } => Failure::Unsupported(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome<T = String> = Result<T, Failure>;

struct Ctx {
    format: Format,
    ring: Option<RingSpec>,
    stdin_used: bool,
}

impl Ctx {
    fn read(&mut self, path: &str) -> Outcome {
        if path == "-" {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(Failure::Parse("standard input can be read only once".into()));
            }
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{path}: {e}")))
        }
    }

    /// Load and validate a descriptor; every failure here is a schema error.
    fn load(&mut self, path: &str) -> Outcome<Descriptor> {
        let text = self.read(path)?;
        let text = match &self.ring {
            None => text,
            Some(ring) => {
                let mut raw: Json =
                    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))?;
                let obj = raw.as_object_mut().ok_or_else(|| Failure::Parse(format!("{path}: expected an object")))?;
                obj.insert("ring".into(), serde_json::to_value(RingJson::from_ring(ring)).expect("ring serializes"));
                raw.to_string()
            }
        };
        Descriptor::parse(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))
    }

    fn load_seq(&mut self, path: &str) -> Outcome<(Option<String>, LinRecSeq)> {
        match self.load(path)? {
            Descriptor::Seq { name, seq } => Ok((name, seq)),
            Descriptor::Bi { name, seq } => Ok((name, linrec::reversal::beta(&seq))),
            Descriptor::K { .. } => Err(Failure::Parse(format!("{path}: expected a one-dimensional sequence"))),
        }
    }

    fn load_k(&mut self, path: &str) -> Outcome<(Option<String>, KSeq)> {
        match self.load(path)? {
            Descriptor::K { name, seq } => Ok((name, seq)),
            Descriptor::Seq { name, seq } => {
                Ok((name, KSeq::new(vec![seq.charpoly().clone()], seq.init().to_vec())?))
            }
            Descriptor::Bi { .. } => Err(Failure::Parse(format!("{path}: expected a k-sequence"))),
        }
    }

    fn require_ring(&self) -> Outcome<RingSpec> {
        self.ring.clone().ok_or_else(|| Failure::Parse("this command needs --ring".into()))
    }
}

fn range(from: Option<i64>, to: Option<i64>, default: (i64, i64)) -> Outcome<Vec<i64>> {
    let (from, to) = (from.unwrap_or(default.0), to.unwrap_or(default.1));
    if from > to {
        return Err(Failure::Parse(format!("--from {from} exceeds --to {to}")));
    }
    Ok((from..=to).collect())
}

fn parse_index<T: std::str::FromStr>(s: &str) -> Outcome<Vec<T>> {
    s.split(',')
        .map(|p| p.trim().parse::<T>().map_err(|_| Failure::Parse(format!("bad multi-index {s:?}"))))
        .collect()
}

fn seq_out(ctx: &Ctx, desc: Descriptor) -> String {
    match ctx.format {
        Format::Json => pretty(&desc.to_json()),
        Format::Table => match &desc {
            Descriptor::Seq { seq, .. } => render::linrec_summary("", seq),
            Descriptor::Bi { seq, .. } => render::seq_summary("", seq.charpoly(), seq.init()),
            Descriptor::K { seq, .. } => kseq_summary(seq),
        },
        Format::Csv => match &desc {
            Descriptor::Seq { seq, .. } => render::seq_csv(seq.charpoly(), seq.init()),
            Descriptor::Bi { seq, .. } => render::seq_csv(seq.charpoly(), seq.init()),
            Descriptor::K { seq, .. } => kseq_csv(seq),
        },
    }
}

fn kseq_summary(w: &KSeq) -> String {
    let mut out = String::new();
    for (j, f) in w.elem().iter().enumerate() {
        out.push_str(&format!("f{}: {f}\n", j + 1));
    }
    for (i, v) in w.chain().iter().zip(w.values()) {
        out.push_str(&format!("{}: {}\n", multi(i), render::value_text(v)));
    }
    out
}

fn kseq_csv(w: &KSeq) -> String {
    let mut out = String::new();
    for (j, f) in w.elem().iter().enumerate() {
        out.push_str(&format!("f{},{f}\n", j + 1));
    }
    for (i, v) in w.chain().iter().zip(w.values()) {
        out.push_str(&format!("\"{}\",{}\n", multi(i), render::value_text(v)));
    }
    out
}

fn multi<T: ToString>(i: &[T]) -> String {
    let parts: Vec<String> = i.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn label(name: &Option<String>, fallback: &str) -> String {
    name.clone().unwrap_or_else(|| fallback.to_string())
}

fn cmd_eval(ctx: &mut Ctx, inputs: &[String], from: Option<i64>, to: Option<i64>) -> Outcome {
    let descs = inputs.iter().map(|p| ctx.load(p)).collect::<Outcome<Vec<_>>>()?;
    if descs.iter().any(|d| matches!(d, Descriptor::K { .. })) {
        return Err(Failure::Parse("use `kseq eval` for k-sequences".into()));
    }
    let bi = descs.iter().all(|d| matches!(d, Descriptor::Bi { .. }));
    let indices = range(from, to, (0, 10))?;
    let fallback = ["u", "v", "w"];
    let mut rows = Vec::new();
    for (k, d) in descs.iter().enumerate() {
        let name = label(&d.name().map(str::to_string), fallback.get(k).copied().unwrap_or("u"));
        let values: Vec<Value> = match d {
            Descriptor::Seq { seq, .. } => {
                if indices[0] < 0 {
                    return Err(Failure::Domain(format!("{name} is indexed by N; negative index {}", indices[0])));
                }
                indices.iter().map(|&n| seq.term_fast(n as u64)).collect()
            }
            Descriptor::Bi { seq, .. } => indices.iter().map(|&z| seq.bi_term(z)).collect(),
            Descriptor::K { .. } => unreachable!(),
        };
        let idx = if bi { "z" } else { "n" };
        rows.push(render::Row { label: format!("{name}({idx})"), values });
    }
    Ok(series(ctx.format, if bi { "z" } else { "n" }, &indices, &rows))
}

fn cmd_combine(ctx: &mut Ctx, op: CombineOp, a: &str, b: &str, charpoly_only: bool, name: Option<String>) -> Outcome {
    let (na, u) = ctx.load_seq(a)?;
    let (nb, v) = ctx.load_seq(b)?;
    let (w, sym) = match op {
        CombineOp::Hadamard => (u.hadamard(&v)?, "*g"),
        CombineOp::Hurwitz => (u.hurwitz(&v)?, "*p"),
        CombineOp::Sum => (u.add(&v)?, "+"),
    };
    let name = name.or_else(|| Some(format!("{}{sym}{}", na?, nb?)));
    if charpoly_only {
        return Ok(match ctx.format {
            Format::Json => pretty(&json!(w.charpoly().to_string())),
            _ => format!("{}\n", w.charpoly()),
        });
    }
    Ok(seq_out(ctx, Descriptor::Seq { name, seq: w }))
}

fn cmd_reverse(ctx: &mut Ctx, input: &str, from: Option<i64>, to: Option<i64>) -> Outcome {
    let (name, w): (Option<String>, BiRecSeq) = match ctx.load(input)? {
        Descriptor::Seq { name, seq } => (name, reverse(&seq)?),
        Descriptor::Bi { name, seq } => (name, seq),
        Descriptor::K { .. } => return Err(Failure::Parse("use `kseq reverse` for k-sequences".into())),
    };
    let indices = range(from, to, (-4, 4))?;
    let values = indices.iter().map(|&z| w.bi_term(z)).collect();
    let row = Row { label: format!("Rev({})(z)", label(&name, "u")), values };
    Ok(series(ctx.format, "z", &indices, &[row]))
}

fn cmd_split(ctx: &mut Ctx, poly: &str) -> Outcome {
    let ring = ctx.require_ring()?;
    let f = Poly::parse(poly, &ring)?;
    let s = f.split_x_part()?;
    Ok(match ctx.format {
        Format::Json => pretty(&json!({
            "d": s.d,
            "q": linrec::wire::PolyJson::from_poly(&s.q),
            "unit_constant": s.unit_constant,
        })),
        Format::Table => format!("d={} q={}{}\n", s.d, s.q, if s.unit_constant { "" } else { " (constant term not a unit)" }),
        Format::Csv => format!("d,q,unit_constant\n{},{},{}\n", s.d, s.q, s.unit_constant),
    })
}

fn cmd_decompose(ctx: &mut Ctx, input: &str) -> Outcome {
    let (name, u) = ctx.load_seq(input)?;
    let dec = decompose(&u)?;
    let base = label(&name, "u");
    let deg = Descriptor::Seq { name: Some(format!("deg({base})")), seq: dec.degenerating };
    let rev = Descriptor::Seq { name: Some(format!("rev({base})")), seq: dec.reversible };
    Ok(match ctx.format {
        Format::Json => pretty(&json!({"d": dec.d, "degenerating": deg.to_json(), "reversible": rev.to_json()})),
        Format::Table => {
            let (Descriptor::Seq { seq: a, .. }, Descriptor::Seq { seq: b, .. }) = (&deg, &rev) else { unreachable!() };
            format!("d={}\n{}{}", dec.d, render::linrec_summary("deg ", a), render::linrec_summary("rev ", b))
        }
        Format::Csv => {
            let (Descriptor::Seq { seq: a, .. }, Descriptor::Seq { seq: b, .. }) = (&deg, &rev) else { unreachable!() };
            format!("d,{}\ndeg {}rev {}", dec.d, render::seq_csv(a.charpoly(), a.init()).replace("\ninit", "\ndeg init"), render::seq_csv(b.charpoly(), b.init()).replace("\ninit", "\nrev init"))
        }
    })
}

fn cmd_period(ctx: &mut Ctx, input: &str) -> Outcome {
    let (_, u) = ctx.load_seq(input)?;
    let p = u.period()?;
    Ok(match ctx.format {
        Format::Json => pretty(&json!({"preperiod": p.preperiod, "period": p.period})),
        Format::Table => format!("d={} t={}\n", p.preperiod, p.period),
        Format::Csv => format!("d,t\n{},{}\n", p.preperiod, p.period),
    })
}

fn cmd_annihilates(ctx: &mut Ctx, poly: &str, input: &str) -> Outcome {
    let (_, u) = ctx.load_seq(input)?;
    let g = Poly::parse(poly, u.ring())?;
    let yes = u.annihilates(&g)?;
    Ok(match ctx.format {
        Format::Json => pretty(&json!(yes)),
        _ => format!("{yes}\n"),
    })
}

fn cmd_delta(ctx: &mut Ctx, input: &str) -> Outcome {
    let (name, u) = ctx.load_seq(input)?;
    let pairs = u.delta()?;
    let base = label(&name, "u");
    Ok(match ctx.format {
        Format::Json => {
            let items: Vec<Json> = pairs
                .into_iter()
                .enumerate()
                .map(|(t, p)| {
                    json!({
                        "left": Descriptor::Seq { name: Some(format!("x^{t}.{base}")), seq: p.left }.to_json(),
                        "right": Descriptor::Seq { name: Some(format!("e{t}")), seq: p.right }.to_json(),
                    })
                })
                .collect();
            pretty(&Json::Array(items))
        }
        Format::Table => pairs
            .iter()
            .enumerate()
            .map(|(t, p)| {
                format!(
                    "t={t}\n{}{}",
                    render::linrec_summary(&format!("  x^{t}.{base} "), &p.left),
                    render::linrec_summary(&format!("  e{t} "), &p.right)
                )
            })
            .collect(),
        Format::Csv => {
            let mut out = String::from("t,side,charpoly,init\n");
            for (t, p) in pairs.iter().enumerate() {
                for (side, s) in [("left", &p.left), ("right", &p.right)] {
                    let init: Vec<String> = s.init().iter().map(render::value_text).collect();
                    out.push_str(&format!("{t},{side},{},\"{}\"\n", s.charpoly(), init.join(",")));
                }
            }
            out
        }
    })
}

fn points_out(ctx: &Ctx, points: &[(Vec<i64>, Value)]) -> String {
    match ctx.format {
        Format::Json => pretty(&Json::Array(
            points.iter().map(|(n, v)| json!({"n": n, "value": render::value_json(v)})).collect(),
        )),
        Format::Csv => {
            let k = points.first().map_or(0, |p| p.0.len());
            let mut out: String = (1..=k).map(|j| format!("n{j},")).collect();
            out.push_str("value\n");
            for (n, v) in points {
                let idx: Vec<String> = n.iter().map(ToString::to_string).collect();
                let v = render::value_text(v);
                out.push_str(&format!("{},{}\n", idx.join(","), if v.contains(',') { format!("\"{v}\"") } else { v }));
            }
            out
        }
        Format::Table => {
            let k = points.first().map_or(0, |p| p.0.len());
            if k == 2 {
                grid_table(points)
            } else {
                points.iter().map(|(n, v)| format!("{} {}\n", multi(n), render::value_text(v))).collect()
            }
        }
    }
}

/// Rows indexed by the first coordinate, columns by the second.
fn grid_table(points: &[(Vec<i64>, Value)]) -> String {
    let mut rows: Vec<i64> = points.iter().map(|p| p.0[0]).collect();
    let mut cols: Vec<i64> = points.iter().map(|p| p.0[1]).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let lookup = |r: i64, c: i64| {
        points.iter().find(|p| p.0[0] == r && p.0[1] == c).map(|p| render::value_text(&p.1)).unwrap_or_default()
    };
    let mut grid = vec![std::iter::once("n1\\n2".to_string()).chain(cols.iter().map(ToString::to_string)).collect::<Vec<_>>()];
    for &r in &rows {
        grid.push(std::iter::once(r.to_string()).chain(cols.iter().map(|&c| lookup(r, c))).collect());
    }
    let widths: Vec<usize> = (0..grid[0].len()).map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0)).collect();
    grid.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            format!("| {} |\n", cells.join(" | "))
        })
        .collect()
}

fn cmd_kseq(ctx: &mut Ctx, cmd: &KCommand) -> Outcome {
    match cmd {
        KCommand::Eval { input, to, at } => {
            let (_, w) = ctx.load_k(input)?;
            let points: Vec<(Vec<i64>, Value)> = if let Some(at) = at {
                let n: Vec<u64> = parse_index(at)?;
                vec![(n.iter().map(|&x| x as i64).collect(), w.kterm(&n)?)]
            } else {
                let to: Vec<u64> = match to {
                    Some(s) => parse_index(s)?,
                    None => w.orders().iter().map(|&l| 2 * l as u64 - 1).collect(),
                };
                w.grid(&to)?.into_iter().map(|(n, v)| (n.iter().map(|&x| x as i64).collect(), v)).collect()
            };
            Ok(points_out(ctx, &points))
        }
        KCommand::Impulse { elem, t } => {
            let ring = ctx.require_ring()?;
            let elem = elem.iter().map(|s| Poly::parse(s, &ring)).collect::<linrec::Result<Vec<_>>>()?;
            let t: Vec<u64> = parse_index(t)?;
            let e = k_impulse(&elem, &t)?;
            Ok(seq_out(ctx, Descriptor::K { name: Some(format!("e{}", multi(&t))), seq: e }))
        }
        KCommand::SepSum { inputs } | KCommand::SepProduct { inputs } => {
            let us = inputs.iter().map(|p| ctx.load_seq(p).map(|x| x.1)).collect::<Outcome<Vec<_>>>()?;
            let w = if matches!(cmd, KCommand::SepSum { .. }) { sep_sum(&us)? } else { sep_product(&us)? };
            Ok(seq_out(ctx, Descriptor::K { name: None, seq: w }))
        }
        KCommand::Delta { input } => {
            let (_, w) = ctx.load_k(input)?;
            let pairs = k_delta(&w)?;
            Ok(match ctx.format {
                Format::Json => pretty(&Json::Array(
                    pairs
                        .into_iter()
                        .map(|p| {
                            json!({
                                "left": Descriptor::K { name: None, seq: p.left }.to_json(),
                                "right": Descriptor::K { name: None, seq: p.right }.to_json(),
                            })
                        })
                        .collect(),
                )),
                _ => pairs
                    .iter()
                    .zip(w.chain())
                    .map(|(p, t)| {
                        let vals = |s: &KSeq| s.values().iter().map(render::value_text).collect::<Vec<_>>().join(",");
                        format!("t={}: left values ({}) right values ({})\n", multi(t), vals(&p.left), vals(&p.right))
                    })
                    .collect(),
            })
        }
        KCommand::Reverse { input, at, from, to } => {
            let (_, w) = ctx.load_k(input)?;
            let points: Vec<Vec<i64>> = if let Some(at) = at {
                vec![parse_index(at)?]
            } else {
                let r = range(*from, *to, (-2, 2))?;
                let side = r.len();
                kseq::polyhedron_chain(&vec![side; w.k()])
                    .into_iter()
                    .map(|p| p.iter().map(|&i| r[i as usize]).collect())
                    .collect::<Vec<Vec<i64>>>()
            };
            let mut points = points;
            points.sort();
            let values = points
                .into_iter()
                .map(|z| Ok((z.clone(), k_reverse_term(&w, &z)?)))
                .collect::<Outcome<Vec<_>>>()?;
            Ok(points_out(ctx, &values))
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let ring = cli.ring.as_deref().map(str::parse::<RingSpec>).transpose()?;
    let mut ctx = Ctx { format: cli.format, ring, stdin_used: false };
    match &cli.command {
        Command::Eval { inputs, from, to } => cmd_eval(&mut ctx, inputs, *from, *to),
        Command::Combine { op, a, b, charpoly_only, name } => {
            cmd_combine(&mut ctx, *op, a, b, *charpoly_only, name.clone())
        }
        Command::Reverse { input, from, to } => cmd_reverse(&mut ctx, input, *from, *to),
        Command::Split { poly } => cmd_split(&mut ctx, poly),
        Command::Decompose { input } => cmd_decompose(&mut ctx, input),
        Command::Period { input } => cmd_period(&mut ctx, input),
        Command::Annihilates { poly, input } => cmd_annihilates(&mut ctx, poly, input),
        Command::Delta { input } => cmd_delta(&mut ctx, input),
        Command::Kseq { command } => cmd_kseq(&mut ctx, command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_errors = cli.format == Format::Json;
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            if json_errors {
                println!("{}", json!({"status": f.code(), "error": f.message()}));
            }
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
