//! Command-line front end: reads JSON documents, runs one operation, writes
//! one JSON document. Exit codes: 0 success, 1 domain error (an error
//! document is written), 2 usage error.

pub mod doc;

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use doc::*;
use projconn_core::cone::cone_quadrics;
use projconn_core::exact::parse_rat;
use projconn_core::osculating::FreeParameters;
use projconn_core::{
    central_locus, central_locus_rank1, centre, classify_rank2, compute_invariants, cone_cross_ratio, cross_ratio,
    embed, envelope_point_locus, envelope_tangential_cubic, fit_connection, g_from_jetmap, geometry_from_connection,
    incidence_form, on_cone, straight_lines_connection, transform_connection, union_locus_conjugate,
    union_locus_general, verify_errata, Element2, ElementTuple, Error, Geometry, Rat,
    SurfaceFrameModel,
};

#[derive(Parser, Debug)]
#[command(name = "projconn", version, about = "Exact projective-connection toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Inputs {
    /// Input document; repeat for several. Standard input is read when absent.
    #[arg(long = "in", value_name = "FILE")]
    files: Vec<PathBuf>,
}

#[derive(Args, Debug)]
struct FreeArgs {
    #[command(flatten)]
    inputs: Inputs,
    /// Values of the two free coordinates (parabolic: α1 β′2; general: p145 p234).
    #[arg(long, num_args = 2, value_names = ["P", "Q"], allow_hyphen_values = true)]
    free: Option<Vec<String>>,
}

#[derive(Args, Debug)]
struct CentreArgs {
    #[command(flatten)]
    inputs: Inputs,
    #[arg(long, allow_hyphen_values = true, requires = "w")]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "v")]
    w: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Joint invariants of an element tuple.
    Invariants(Inputs),
    /// Cross-ratio of the v-values of four elements.
    CrossRatio(Inputs),
    /// Connection through four elements.
    Fit(Inputs),
    /// Image of elements under a jet map.
    TransformElement(Inputs),
    /// Image of a connection under a jet map.
    TransformConnection(Inputs),
    /// Centres of curvature.
    Centre(CentreArgs),
    /// Central locus of a connection or a rank-2 equation.
    CentreLocus(Inputs),
    /// Degree reduction of the central locus of a rank-2 equation.
    ClassifyRank2(Inputs),
    /// Connection encoded by a surface model and incidence geometry.
    Incidence(Inputs),
    /// Incidence geometry realizing a connection.
    Geometry(FreeArgs),
    /// Envelope of the osculating-plane family on an asymptotic net.
    Envelope(Inputs),
    /// Union of the osculating planes of the integral curves.
    UnionLocus(FreeArgs),
    /// Connection of the straight lines of a plane surface.
    StraightLines(Inputs),
    /// Elements as points of the cubic cone.
    Embed(Inputs),
    /// Cone membership of points.
    ConeCheck(Inputs),
    /// The 5x5 matrix of a jet map acting on the cone.
    GMatrix(Inputs),
    /// Cross-ratio of four cone generators.
    ConeCrossRatio(Inputs),
    /// Cross-check published closed forms against their oracles.
    VerifyErrata,
}

/// Exit code and captured streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Run<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Run<T> {
    Err(Failure::Usage(msg.into()))
}

/// Runs the command line `args` (program name first).
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(d) => Outcome { code: 0, stdout: d.to_text(), stderr: String::new() },
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: Document::Error(ErrorDoc::of(&e)).to_text(), stderr: String::new() },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn parse_docs(text: &str, source: &str) -> Run<Vec<Document>> {
    serde_json::Deserializer::from_str(text)
        .into_iter::<Document>()
        .collect::<Result<Vec<_>, _>>()
        .or_else(|e| usage(format!("{source}: {e}")))
}

fn read_inputs(inputs: &Inputs, stdin: &mut dyn Read) -> Run<Docs> {
    let mut docs = Vec::new();
    if inputs.files.is_empty() {
        let mut text = String::new();
        if let Err(e) = stdin.read_to_string(&mut text) {
            return usage(format!("standard input: {e}"));
        }
        docs = parse_docs(&text, "standard input")?;
    }
    for f in &inputs.files {
        let text = match std::fs::read_to_string(f) {
            Ok(t) => t,
            Err(e) => return usage(format!("{}: {e}", f.display())),
        };
        docs.extend(parse_docs(&text, &f.display().to_string())?);
    }
    if docs.is_empty() {
        return usage("no input documents");
    }
    Ok(Docs { docs })
}

struct Docs {
    docs: Vec<Document>,
}

impl Docs {
    fn kinds(&self) -> String {
        self.docs.iter().map(Document::kind).collect::<Vec<_>>().join(", ")
    }

    /// Exactly the listed kinds, in any order.
    fn expect(&self, kinds: &[&str]) -> Run<()> {
        let mut got: Vec<&str> = self.docs.iter().map(Document::kind).collect();
        let mut want = kinds.to_vec();
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            return usage(format!("expected documents [{}], got [{}]", kinds.join(", "), self.kinds()));
        }
        Ok(())
    }

    fn find<T>(&self, f: impl Fn(&Document) -> Option<&T>) -> &T {
        self.docs.iter().find_map(f).expect("kinds checked")
    }

    fn has(&self, kind: &str) -> bool {
        self.docs.iter().any(|d| d.kind() == kind)
    }

    fn basepoint(&self) -> Option<Value> {
        self.docs.iter().find_map(|d| d.basepoint().cloned())
    }

    fn elements(&self) -> Vec<Element2> {
        self.find(|d| if let Document::Elements(e) = d { Some(e) } else { None })
            .elements
            .iter()
            .map(ElementDoc::element)
            .collect()
    }

    fn jetmap(&self) -> &JetMapDoc {
        self.find(|d| if let Document::Jetmap(x) = d { Some(x) } else { None })
    }

    fn connection(&self) -> &ConnectionDoc {
        self.find(|d| if let Document::Connection(x) = d { Some(x) } else { None })
    }

    fn rank2(&self) -> &Rank2Doc {
        self.find(|d| if let Document::Rank2(x) = d { Some(x) } else { None })
    }

    fn model(&self) -> SurfaceFrameModel {
        self.find(|d| if let Document::Model(x) = d { Some(x) } else { None }).model()
    }

    fn geometry(&self) -> Run<Geometry> {
        let g = self.find(|d| if let Document::Geometry(x) = d { Some(x) } else { None });
        Ok(g.geometry().map_err(Failure::Usage)??)
    }

    fn cone_points(&self) -> Run<Vec<projconn_core::ConePoint>> {
        let p = self.find(|d| if let Document::ConePoints(x) = d { Some(x) } else { None });
        Ok(p.points().map_err(Failure::Usage)??)
    }
}

fn rat_arg(s: &str, name: &str) -> Run<Rat> {
    parse_rat(s).or_else(|_| usage(format!("--{name}: invalid rational {s:?}")))
}

fn free_params(free: &Option<Vec<String>>) -> Run<FreeParameters> {
    match free {
        None => Ok(FreeParameters::default()),
        Some(v) => Ok(FreeParameters([rat_arg(&v[0], "free")?, rat_arg(&v[1], "free")?])),
    }
}

fn four<T: Clone>(xs: &[T], what: &str) -> Run<[T; 4]> {
    match <[T; 4]>::try_from(xs.to_vec()) {
        Ok(a) => Ok(a),
        Err(v) => usage(format!("{what} needs exactly 4 entries, got {}", v.len())),
    }
}

fn locus(locus: &str, class: Option<&str>, equations: &[projconn_core::Poly], basepoint: Option<Value>) -> Document {
    Document::Locus(LocusDoc {
        basepoint,
        locus: locus.to_string(),
        class: class.map(str::to_string),
        equations: equations.iter().map(PolyDoc::of).collect(),
    })
}

fn execute(command: Command, stdin: &mut dyn Read) -> Run<Document> {
    match command {
        Command::Invariants(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["elements"])?;
            let tuple = ElementTuple::new(docs.elements())?;
            let inv = compute_invariants(&tuple)?;
            Ok(Document::Invariants(InvariantsDoc::of(tuple.len(), &inv, docs.basepoint())))
        }
        Command::CrossRatio(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["elements"])?;
            let [a, b, c, d] = four(&docs.elements(), "cross-ratio")?;
            Ok(Document::Number(NumberDoc { value: Q(cross_ratio(&a.v, &b.v, &c.v, &d.v)?) }))
        }
        Command::Fit(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["elements"])?;
            let es = four(&docs.elements(), "fit")?;
            Ok(Document::Connection(ConnectionDoc::of(&fit_connection(&es)?, docs.basepoint())))
        }
        Command::TransformElement(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["jetmap", "elements"])?;
            let g = docs.jetmap().jetmap()?;
            let out = docs.elements().iter().map(|e| g.apply(e)).collect::<Result<Vec<_>, _>>()?;
            Ok(Document::Elements(ElementsDoc {
                basepoint: docs.basepoint(),
                elements: out.iter().map(ElementDoc::of).collect(),
            }))
        }
        Command::TransformConnection(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["jetmap", "connection"])?;
            let g = docs.jetmap().jetmap()?;
            let k = docs.connection().connection()?;
            Ok(Document::Connection(ConnectionDoc::of(&transform_connection(&g, &k), docs.basepoint())))
        }
        Command::Centre(args) => {
            if let (Some(v), Some(w)) = (&args.v, &args.w) {
                if !args.inputs.files.is_empty() {
                    return usage("give either --v/--w or input documents");
                }
                let c = centre(&Element2::new(rat_arg(v, "v")?, rat_arg(w, "w")?))?;
                return Ok(Document::Centre(CentreDoc { x0: Q(c.x0), y0: Q(c.y0) }));
            }
            let docs = read_inputs(&args.inputs, stdin)?;
            docs.expect(&["elements"])?;
            let cs = docs.elements().iter().map(centre).collect::<Result<Vec<_>, _>>()?;
            Ok(Document::Centres(CentresDoc {
                basepoint: docs.basepoint(),
                centres: cs.into_iter().map(|c| CentreDoc { x0: Q(c.x0), y0: Q(c.y0) }).collect(),
            }))
        }
        Command::CentreLocus(i) => {
            let docs = read_inputs(&i, stdin)?;
            if docs.has("rank2") {
                docs.expect(&["rank2"])?;
                let eqn = docs.rank2().equation().map_err(Failure::Usage)??;
                let p = central_locus(&eqn.to_poly("v", "w"), "v", "w")?;
                return Ok(locus("central-locus", None, &[p], docs.basepoint()));
            }
            docs.expect(&["connection"])?;
            let k = docs.connection().connection()?;
            Ok(locus("central-locus", None, &[central_locus_rank1(&k)], docs.basepoint()))
        }
        Command::ClassifyRank2(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["rank2"])?;
            let eqn = docs.rank2().equation().map_err(Failure::Usage)??;
            let (class, p) = classify_rank2(&eqn)?;
            Ok(locus("central-locus", Some(class.name()), &[p], docs.basepoint()))
        }
        Command::Incidence(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["model", "geometry"])?;
            let inc = incidence_form(&docs.model(), &docs.geometry()?)?;
            Ok(Document::Incidence(IncidenceDoc {
                basepoint: docs.basepoint(),
                connection: ConnectionDoc::of(&inc.connection, None),
                determinant: PolyDoc::of(&inc.determinant),
                closed_form_agrees: inc.printed_agrees(),
            }))
        }
        Command::Geometry(args) => {
            let docs = read_inputs(&args.inputs, stdin)?;
            docs.expect(&["model", "connection"])?;
            let k = docs.connection().connection()?;
            let g = geometry_from_connection(&docs.model(), &k, &free_params(&args.free)?)?;
            Ok(Document::Geometry(GeometryDoc::of(&g)))
        }
        Command::Envelope(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["model", "connection"])?;
            let (model, k) = (docs.model(), docs.connection().connection()?);
            let tangential = envelope_tangential_cubic(&model, &k)?;
            let env = envelope_point_locus(&model, &k)?;
            Ok(Document::Envelope(EnvelopeDoc {
                basepoint: docs.basepoint(),
                class: env.class.name().to_string(),
                tangential: PolyDoc::of(&tangential),
                discriminant: PolyDoc::of(&env.discriminant),
                components: env.components.iter().map(PolyDoc::of).collect(),
            }))
        }
        Command::UnionLocus(args) => {
            let docs = read_inputs(&args.inputs, stdin)?;
            let model = if docs.has("geometry") {
                docs.expect(&["model", "geometry"])?;
                docs.model()
            } else {
                docs.expect(&["model", "connection"])?;
                docs.model()
            };
            let eqs = match &model {
                SurfaceFrameModel::LaplaceNet { .. } => {
                    if !docs.has("connection") {
                        return usage("the conjugate-net locus takes a connection document");
                    }
                    vec![union_locus_conjugate(&model, &docs.connection().connection()?)?]
                }
                SurfaceFrameModel::GeneralSurface => {
                    let g = if docs.has("geometry") {
                        docs.geometry()?
                    } else {
                        let k = docs.connection().connection()?;
                        geometry_from_connection(&model, &k, &free_params(&args.free)?)?
                    };
                    let Geometry::Plane(plane) = g else {
                        return Err(Error::Mismatch(format!("a general-surface model does not take {} data", g.tag())).into());
                    };
                    union_locus_general(&plane)?.to_vec()
                }
                other => {
                    return Err(Error::Mismatch(format!("no union locus for a {} model", other.tag())).into());
                }
            };
            Ok(locus("union-locus", None, &eqs, docs.basepoint()))
        }
        Command::StraightLines(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["model"])?;
            Ok(Document::Connection(ConnectionDoc::of(&straight_lines_connection(&docs.model())?, docs.basepoint())))
        }
        Command::Embed(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["elements"])?;
            let pts: Vec<_> = docs.elements().iter().map(embed).collect();
            Ok(Document::ConePoints(ConePointsDoc::of(&pts)))
        }
        Command::ConeCheck(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["cone-points"])?;
            let results = docs
                .cone_points()?
                .iter()
                .map(|p| ConeCheckEntry {
                    point: p.coords().iter().map(Q::from).collect(),
                    vertex: p.is_vertex(),
                    on_cone: on_cone(p),
                    quadrics: cone_quadrics(p.coords()).iter().map(Q::from).collect(),
                })
                .collect();
            Ok(Document::ConeCheck(ConeCheckDoc { results }))
        }
        Command::GMatrix(i) => {
            let docs = read_inputs(&i, stdin)?;
            docs.expect(&["jetmap"])?;
            let m = g_from_jetmap(&docs.jetmap().jetmap()?);
            Ok(Document::Matrix(MatrixDoc { rows: m.rows().iter().map(|r| r.iter().map(Q::from).collect()).collect() }))
        }
        Command::ConeCrossRatio(i) => {
            let docs = read_inputs(&i, stdin)?;
            let pts = if docs.has("elements") {
                docs.expect(&["elements"])?;
                docs.elements().iter().map(embed).collect()
            } else {
                docs.expect(&["cone-points"])?;
                docs.cone_points()?
            };
            let pts = four(&pts, "cone-cross-ratio")?;
            Ok(Document::Number(NumberDoc { value: Q(cone_cross_ratio(&pts)?) }))
        }
        Command::VerifyErrata => Ok(Document::Report(ReportDoc::of(&verify_errata()))),
    }
}
