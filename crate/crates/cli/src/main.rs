mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use artin_core::{
    build_system, ArtinElement, Atom, CoxeterMatrix, Error, Garside, GVertex, HomologyProfile, Order, TorsionKind,
    DEFAULT_BALL_CAP, DEFAULT_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use output::Record;
use serde_json::{json, Value};

/// Normal forms, the complex X(G) and torsion in spherical Artin groups
/// modulo the square of the Garside element.
#[derive(Parser, Debug)]
#[command(name = "artin", version)]
struct Cli {
    /// Group file: `generators: a b ...` then `m: a b k` lines
    group: PathBuf,

    #[arg(short, long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest Coxeter group to enumerate
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    group_cap: usize,

    /// Largest ball to build
    #[arg(long, default_value_t = DEFAULT_BALL_CAP, global = true)]
    ball_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order of W, length of Δ, atoms and irreducible components
    Info,
    /// Canonical form `D^k.A1.A2...` of an element
    Nf { element: String },
    /// Product g·h
    Mul { g: String, h: String },
    /// Inverse
    Inv { g: String },
    /// Conjugate h·g·h⁻¹
    Conj { g: String, h: String },
    /// Atomdistance and both worddistances between two vertices
    Dist { v: String, w: String },
    /// The symmetric geodesic from v to w
    Geodesic { v: String, w: String },
    /// All vertices within atomdistance r
    Ball {
        radius: usize,
        #[arg(long, default_value = "*")]
        center: String,
    },
    /// Ascending and descending links with their homology
    Links { v: String },
    /// The Charney graph and its strongly connected components
    Charney,
    /// Order of an element in G
    Order { g: String },
    /// Torsion type, conjugator and invariant simplex
    Torsion { g: String },
    /// Worddistances d_wd(*, gⁿ*) for n = 1..N
    Translation {
        g: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Image of an itinerary prefix, e.g. `a.ab.b` or `a.ab...` for a periodic tail
    Act {
        g: String,
        #[arg(long)]
        prefix: String,
        /// Prefix length to act on; defaults to the written length
        #[arg(long)]
        len: Option<usize>,
    },
    /// Centers of a comma-separated vertex set; exhaustive within a ball
    /// when a radius is given, otherwise by descent
    Center {
        vertices: String,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Vertices of minimal displacement within ball(*, r)
    Minset {
        g: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// An element moving itineraries that start with `head` to ones starting with `target`
    Witness { target: String, head: String },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::GroupFile(_) | Error::NotFiniteType(_) => 3,
        Error::CapExceeded { .. } => 5,
        _ => 4,
    }
}

/// The error text without the prefix that repeats the kind.
fn detail(e: &Error) -> String {
    match e {
        Error::GroupFile(m) | Error::NotFiniteType(m) | Error::Parse(m) | Error::InvalidItinerary(m) => m.clone(),
        other => other.to_string(),
    }
}

fn load(cli: &Cli) -> artin_core::Result<Garside> {
    let text = std::fs::read_to_string(&cli.group)
        .map_err(|e| Error::GroupFile(format!("{}: {e}", cli.group.display())))?;
    let matrix = CoxeterMatrix::parse(&text)?;
    Ok(Garside::new(build_system(matrix, cli.group_cap)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = load(&cli).map_err(Failure::from).and_then(|g| run(&cli, &g));
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: Usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {}: {}", e.kind(), detail(&e));
            ExitCode::from(exit_code(&e))
        }
    }
}

fn render(cli: &Cli, records: &[Record]) -> Outcome {
    match cli.format {
        Format::Text => Ok(output::text(records)),
        Format::Json => Ok(output::json_lines(records)),
        Format::Csv => Ok(output::csv(records)),
        Format::Dot => Err(Failure::Usage("dot output is only available for ball and charney".into())),
    }
}

fn vertices(g: &Garside, vs: &[GVertex]) -> Value {
    vs.iter().map(|v| g.render_vertex(v)).collect()
}

fn atoms(g: &Garside, xs: &[Atom]) -> Value {
    xs.iter().map(|&a| g.render_atom(a)).collect()
}

fn dotted(g: &Garside, xs: &[Atom]) -> String {
    xs.iter().map(|&a| g.render_atom(a)).collect::<Vec<_>>().join(".")
}

fn homology(h: &HomologyProfile) -> Record {
    let verdict = if h.empty {
        "empty".to_string()
    } else if h.is_acyclic() {
        "acyclic".to_string()
    } else if let Some(n) = (0..h.betti.len()).find(|&n| h.is_sphere(n)) {
        format!("sphere{n}")
    } else {
        "other".to_string()
    };
    let torsion: Vec<String> = h
        .torsion
        .iter()
        .enumerate()
        .flat_map(|(d, fs)| fs.iter().map(move |f| format!("{d}:{f}")))
        .collect();
    vec![("homology", json!(verdict)), ("betti", json!(h.betti)), ("torsion", json!(torsion))]
}

fn run(cli: &Cli, g: &Garside) -> Outcome {
    let elem = |s: &str| -> artin_core::Result<ArtinElement> { g.parse_element(s) };
    let vertex = |s: &str| -> artin_core::Result<GVertex> { g.parse_vertex(s) };
    let single = |key: &'static str, value: Value| -> Vec<Record> { vec![vec![(key, value)]] };

    let records: Vec<Record> = match &cli.command {
        Command::Info => {
            let sys = g.system();
            let types: Vec<String> = sys.types().iter().map(|t| t.to_string()).collect();
            vec![vec![
                ("rank", json!(sys.rank())),
                ("order", json!(sys.order())),
                ("delta_length", json!(g.delta_length())),
                ("delta", json!(g.render_atom(g.delta()))),
                ("atoms", json!(sys.order())),
                ("proper_atoms", json!(g.proper_atoms().count())),
                ("irreducible", json!(sys.is_irreducible())),
                ("types", json!(types)),
            ]]
        }
        Command::Nf { element } => single("nf", json!(g.render_artin(&elem(element)?))),
        Command::Mul { g: x, h } => single("product", json!(g.render_artin(&g.mul(&elem(x)?, &elem(h)?)))),
        Command::Inv { g: x } => single("inverse", json!(g.render_artin(&g.inv(&elem(x)?)))),
        Command::Conj { g: x, h } => {
            single("conjugate", json!(g.render_artin(&g.conjugate(&elem(x)?, &elem(h)?))))
        }
        Command::Dist { v, w } => {
            let (v, w) = (vertex(v)?, vertex(w)?);
            vec![vec![
                ("d_at", json!(g.d_at(&v, &w))),
                ("d_wd", json!(g.d_wd(&v, &w))),
                ("d_wd_back", json!(g.d_wd(&w, &v))),
            ]]
        }
        Command::Geodesic { v, w } => g
            .geodesic(&vertex(v)?, &vertex(w)?)
            .iter()
            .map(|p| vec![("vertex", json!(g.render_vertex(p)))])
            .collect(),
        Command::Ball { radius, center } => {
            let ball = g.ball(&vertex(center)?, *radius, cli.ball_cap)?;
            match cli.format {
                Format::Dot => return Ok(g.ball_to_dot(&ball)),
                Format::Csv => return Ok(g.ball_to_csv(&ball)),
                _ => {}
            }
            ball.vertices
                .iter()
                .zip(&ball.depth)
                .map(|(v, d)| {
                    vec![
                        ("vertex", json!(g.render_vertex(v))),
                        ("d_at", json!(d)),
                        ("wordnorm", json!(g.wordnorm(v))),
                    ]
                })
                .collect()
        }
        Command::Links { v } => {
            let (up, down) = g.links(&vertex(v)?);
            [up, down]
                .iter()
                .map(|l| {
                    let edges: Vec<String> = l
                        .edges
                        .iter()
                        .map(|&(i, j)| format!("{}-{}", g.render_atom(l.atoms[i]), g.render_atom(l.atoms[j])))
                        .collect();
                    let mut r: Record = vec![
                        ("link", json!(if l.ascending { "ascending" } else { "descending" })),
                        ("pivot", json!(g.render_atom(l.pivot))),
                        ("atoms", atoms(g, &l.atoms)),
                        ("edges", json!(edges)),
                    ];
                    r.extend(homology(&l.homology()));
                    r
                })
                .collect()
        }
        Command::Charney => {
            let cg = g.charney_graph();
            if cli.format == Format::Dot {
                return Ok(g.charney_to_dot(&cg));
            }
            let components: Vec<String> = cg
                .components()
                .iter()
                .map(|c| format!("{{{}}}", c.iter().map(|&a| g.render_atom(a)).collect::<Vec<_>>().join(" ")))
                .collect();
            let mut out = vec![vec![
                ("nodes", json!(cg.node_count())),
                ("edges", json!(cg.edge_count())),
                ("strongly_connected", json!(cg.is_strongly_connected())),
                ("components", json!(components)),
            ]];
            for a in cg.atoms() {
                for b in cg.successors(a) {
                    out.push(vec![("from", json!(g.render_atom(a))), ("to", json!(g.render_atom(b)))]);
                }
            }
            out
        }
        Command::Order { g: x } => match g.order_in_g(&elem(x)?) {
            Order::Finite(n) => single("order", json!(n)),
            Order::Infinite => single("order", json!("infinite")),
        },
        Command::Torsion { g: x } => {
            let t = g.classify_torsion(&elem(x)?)?;
            let kind = match t.kind {
                TorsionKind::Type1 => "type1",
                TorsionKind::Type2 => "type2",
            };
            vec![vec![
                ("kind", json!(kind)),
                ("b", json!(g.render_atom(t.b))),
                ("m", json!(t.m)),
                ("order", json!(t.order)),
                ("generator", json!(g.render_artin(&g.torsion_generator(&t)))),
                ("conjugator", json!(g.render_artin(&t.conjugator))),
                ("simplex", vertices(g, &t.simplex)),
            ]]
        }
        Command::Translation { g: x, n } => {
            let tb = g.translation_bounds(&elem(x)?, *n);
            vec![vec![("values", json!(tb.values)), ("inf_ratio", json!(tb.inf_ratio.to_string()))]]
        }
        Command::Act { g: x, prefix, len } => {
            let it = g.parse_itinerary(prefix)?;
            let img = g.act_itinerary(&elem(x)?, &it, len.unwrap_or(it.len()))?;
            vec![vec![("image", json!(dotted(g, &img.atoms))), ("guaranteed", json!(img.guaranteed))]]
        }
        Command::Center { vertices: list, radius } => {
            let targets = list.split(',').map(vertex).collect::<artin_core::Result<Vec<_>>>()?;
            match radius {
                Some(r) => {
                    let first = targets.first().ok_or(Error::EmptyInput)?;
                    let res = g.center_in(&targets, &g.ball(first, *r, cli.ball_cap)?)?;
                    vec![vec![
                        ("radius", json!(res.value)),
                        ("centers", vertices(g, &res.realizers)),
                        ("interior", json!(res.interior)),
                    ]]
                }
                None => {
                    let (value, centers) = g.centers(&targets)?;
                    vec![vec![("radius", json!(value)), ("centers", vertices(g, &centers))]]
                }
            }
        }
        Command::Minset { g: x, radius } => {
            let ball = g.ball(&GVertex::base(), *radius, cli.ball_cap)?;
            let res = g.minset_in(&elem(x)?, &ball)?;
            vec![vec![
                ("displacement", json!(res.value)),
                ("minset", vertices(g, &res.realizers)),
                ("interior", json!(res.interior)),
            ]]
        }
        Command::Witness { target, head } => {
            let target: Vec<Atom> = target.split('.').map(|s| g.parse_atom(s)).collect::<artin_core::Result<_>>()?;
            let head = g.parse_atom(head)?;
            let cg = g.charney_graph();
            let w = g.density_witness(&cg, &target, head)?;
            let img = g.act_prefix(&w, &vec![head; w.atomnorm() + 2]);
            vec![vec![
                ("witness", json!(g.render_artin(&w))),
                ("image", json!(dotted(g, &img.atoms[..img.guaranteed]))),
            ]]
        }
    };
    render(cli, &records)
}
