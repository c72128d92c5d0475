//! The `arrcoh` command-line front end.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::GradedAbelianGroup;
use crate::complex::SimplicialComplex;
use crate::constructions::{
    bbcg_summands, cone_equivalence_check, dimension_report, kequal_closed_form,
    realize_as_coordinate, AmbientComparison, BbcgReport, ConeReport, DimensionReport,
    KEqualReport, Realization, SuspensionReport,
};
use crate::error::{Error, Result};
use crate::gm::{self, GmTerm, StratumMethod};
use crate::io::{canonical_hash, parse_complex, Report};
use crate::lattice::{
    self, Ambient, ArrangementKind, DualIsomorphism, GeneratorSet, IntersectionLattice, LatticeDump,
};
use crate::ring::{golod_product_check, product_table, GolodReport, ProductTable};

/// Environment variable naming an optional directory for cached reports.
pub const CACHE_ENV: &str = "ARRCOH_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "arrcoh",
    version,
    about = "Cohomology of diagonal and coordinate subspace arrangement complements"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Number of worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Diagonal,
    Coordinate,
}

impl From<SpaceArg> for ArrangementKind {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Diagonal => ArrangementKind::Diagonal,
            SpaceArg::Coordinate => ArrangementKind::Coordinate,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AmbientArg {
    Real,
    Complex,
}

impl From<AmbientArg> for Ambient {
    fn from(a: AmbientArg) -> Self {
        match a {
            AmbientArg::Real => Ambient::Real,
            AmbientArg::Complex => Ambient::Complex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    OpenInterval,
    RelativePair,
}

impl From<MethodArg> for StratumMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::OpenInterval => StratumMethod::OpenInterval,
            MethodArg::RelativePair => StratumMethod::RelativePair,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GeneratorsArg {
    MissingFaces,
    NonFaces,
}

impl From<GeneratorsArg> for GeneratorSet {
    fn from(g: GeneratorsArg) -> Self {
        match g {
            GeneratorsArg::MissingFaces => GeneratorSet::MissingFaces,
            GeneratorsArg::NonFaces => GeneratorSet::NonFaces,
        }
    }
}

#[derive(Args, Clone, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Complex JSON file, or `-` for standard input.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// A built-in example: two-points, square, rp2, rp2-cone.
    #[arg(long)]
    example: Option<String>,
}

#[derive(Args, Clone, Debug)]
struct ArrangementArgs {
    #[arg(long, value_enum, default_value_t = SpaceArg::Diagonal)]
    space: SpaceArg,
    #[arg(long, value_enum, default_value_t = AmbientArg::Complex)]
    ambient: AmbientArg,
    /// Subspaces generating the lattice.
    #[arg(long, value_enum, default_value_t = GeneratorsArg::MissingFaces)]
    generators: GeneratorsArg,
}

#[derive(Subcommand, Clone, Debug)]
enum Command {
    /// Cohomology of a complement via the intersection lattice.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// Highest degree to report (default: the real ambient dimension).
        #[arg(long)]
        max_q: Option<i64>,
        #[arg(long, value_enum, default_value_t = MethodArg::OpenInterval)]
        method: MethodArg,
        /// Recompute through every independent route and fail on mismatch.
        #[arg(long)]
        oracle: bool,
    },
    /// The intersection lattice with its Hasse diagram.
    Lattice {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        arrangement: ArrangementArgs,
        /// Also match strata with non-faces and dual faces.
        #[arg(long)]
        dual: bool,
    },
    /// Products of all pairs of cohomology generators.
    Product {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        arrangement: ArrangementArgs,
    },
    /// Wedge decomposition of the moment-angle complex.
    Bbcg {
        #[command(flatten)]
        input: Input,
        /// Compare the wedge cohomology with the lattice computation.
        #[arg(long)]
        oracle: bool,
    },
    /// Ordinary products on the coordinate complement.
    GolodCheck {
        #[command(flatten)]
        input: Input,
    },
    /// The k-equal arrangement by closed form, wedge and lattice.
    Kequal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = AmbientArg::Complex)]
        ambient: AmbientArg,
    },
    /// Coordinate complement against the suspended diagonal complement.
    CheckSuspension {
        #[command(flatten)]
        input: Input,
    },
    /// Coordinate complement against the diagonal complement of the cone extension.
    CheckCone {
        #[command(flatten)]
        input: Input,
    },
    /// Missing faces, common-vertex predicate, dimension and neighbourliness.
    Mf {
        #[command(flatten)]
        input: Input,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Cohomology { .. } => "cohomology",
            Command::Lattice { .. } => "lattice",
            Command::Product { .. } => "product",
            Command::Bbcg { .. } => "bbcg",
            Command::GolodCheck { .. } => "golod-check",
            Command::Kequal { .. } => "kequal",
            Command::CheckSuspension { .. } => "check-suspension",
            Command::CheckCone { .. } => "check-cone",
            Command::Mf { .. } => "mf",
        }
    }

    fn input(&self) -> Option<&Input> {
        match self {
            Command::Cohomology { input, .. }
            | Command::Lattice { input, .. }
            | Command::Product { input, .. }
            | Command::Bbcg { input, .. }
            | Command::GolodCheck { input }
            | Command::CheckSuspension { input }
            | Command::CheckCone { input }
            | Command::Mf { input } => Some(input),
            Command::Kequal { .. } => None,
        }
    }

    /// The command with its input location blanked, for cache keys.
    fn without_input(&self) -> Command {
        let mut c = self.clone();
        let blank = |i: &mut Input| {
            i.complex = None;
            i.example = None;
        };
        match &mut c {
            Command::Cohomology { input, .. }
            | Command::Lattice { input, .. }
            | Command::Product { input, .. }
            | Command::Bbcg { input, .. }
            | Command::GolodCheck { input }
            | Command::CheckSuspension { input }
            | Command::CheckCone { input }
            | Command::Mf { input } => blank(input),
            Command::Kequal { .. } => {}
        }
        c
    }
}

/// Runs the tool on `argv` (including the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome { text, failure }) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            match failure {
                Some(msg) => {
                    let _ = writeln!(err, "arrcoh: {msg}");
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "arrcoh: {e}");
            e.exit_code()
        }
    }
}

/// Runs the tool with the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

struct Outcome {
    text: String,
    /// A check whose report was produced but did not hold.
    failure: Option<String>,
}

fn read_input(input: &Input) -> Result<SimplicialComplex> {
    if let Some(name) = &input.example {
        return crate::corpus::named(name).ok_or_else(|| {
            Error::Malformed(format!(
                "unknown example {name:?}; known: {}",
                crate::corpus::NAMED_EXAMPLES.join(", ")
            ))
        });
    }
    let path = input.complex.as_ref().expect("clap enforces one input");
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Malformed(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("reading {}: {e}", path.display())))?
    };
    parse_complex(&text)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let complex = cli.command.input().map(read_input).transpose()?;
    let cache = cache_path(cli, complex.as_ref());
    if let Some(path) = &cache {
        if let Ok(text) = std::fs::read_to_string(path) {
            log::debug!("cache hit {}", path.display());
            return Ok(Outcome {
                text,
                failure: None,
            });
        }
    }
    let work = || dispatch(cli, complex.as_ref());
    let outcome = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    if let (Some(path), None) = (&cache, &outcome.failure) {
        if let Err(e) = write_cache(path, &outcome.text) {
            log::warn!("could not write cache entry {}: {e}", path.display());
        }
    }
    Ok(outcome)
}

fn cache_path(cli: &Cli, complex: Option<&SimplicialComplex>) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let key = format!(
        "{}|{:?}|{:?}|{}",
        env!("CARGO_PKG_VERSION"),
        cli.format,
        cli.command.without_input(),
        complex.map(canonical_hash).unwrap_or_default()
    );
    let digest = hex::encode(Sha256::digest(key.as_bytes()));
    Some(Path::new(&dir).join(format!("{digest}.out")))
}

fn write_cache(path: &Path, text: &str) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        std::fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(tmp, path)
}

fn emit<T: Serialize + Render>(
    cli: &Cli,
    complex: Option<&SimplicialComplex>,
    result: T,
    failure: Option<String>,
) -> Result<Outcome> {
    let text = match cli.format {
        Format::Json => {
            let report = Report::new(cli.command.name(), complex, result);
            let mut s = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::Integrity(format!("serializing report: {e}")))?;
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            if let Some(k) = complex {
                let _ = writeln!(s, "input {} (m = {})", canonical_hash(k), k.m());
            }
            result.render(&mut s);
            s
        }
    };
    Ok(Outcome { text, failure })
}

fn dispatch(cli: &Cli, complex: Option<&SimplicialComplex>) -> Result<Outcome> {
    let k = || complex.expect("command reads a complex");
    match &cli.command {
        Command::Cohomology {
            arrangement,
            max_q,
            method,
            oracle,
            ..
        } => {
            let r = cohomology(k(), arrangement, *max_q, (*method).into(), *oracle)?;
            emit(cli, complex, r, None)
        }
        Command::Lattice {
            arrangement, dual, ..
        } => {
            let l = build_lattice(k(), arrangement)?;
            let dual = if *dual {
                Some(lattice::lattice_isomorphic_to_dual(k())?)
            } else {
                None
            };
            emit(
                cli,
                complex,
                LatticeResult {
                    lattice: l.dump(),
                    dual,
                },
                None,
            )
        }
        Command::Product { arrangement, .. } => {
            let table = product_table(
                k(),
                arrangement.space.into(),
                arrangement.ambient.into(),
                arrangement.generators.into(),
            )?;
            emit(cli, complex, table, None)
        }
        Command::Bbcg { oracle, .. } => {
            let report = bbcg_summands(k())?;
            if *oracle {
                let u = gm::coordinate_cohomology(
                    k(),
                    Ambient::Complex,
                    None,
                    GeneratorSet::MissingFaces,
                    StratumMethod::OpenInterval,
                )?;
                if u != report.cohomology {
                    return Err(Error::Integrity(format!(
                        "wedge cohomology {} differs from the lattice computation {}",
                        one_line(&report.cohomology),
                        one_line(&u)
                    )));
                }
            }
            emit(cli, complex, report, None)
        }
        Command::GolodCheck { .. } => emit(cli, complex, golod_product_check(k())?, None),
        Command::Kequal { m, k, ambient, .. } => {
            let report = kequal_closed_form(*m, *k, (*ambient).into())?;
            let failure = (!report.computational_paths_agree())
                .then(|| "computational paths disagree".to_string());
            emit(cli, None, report, failure)
        }
        Command::CheckSuspension { .. } => {
            let report = crate::constructions::suspension_relation_check(k())?;
            let failure = (!report.holds).then(|| "suspension relation fails".to_string());
            emit(cli, complex, report, failure)
        }
        Command::CheckCone { .. } => {
            let report = cone_equivalence_check(k())?;
            let failure = (!report.holds).then(|| "cone equivalence fails".to_string());
            emit(cli, complex, report, failure)
        }
        Command::Mf { .. } => {
            let k = k();
            let realization = if k.has_ghost_vertices() || k.is_void() {
                None
            } else {
                realize_as_coordinate(k)?
            };
            emit(
                cli,
                complex,
                MfResult {
                    report: dimension_report(k),
                    realization,
                },
                None,
            )
        }
    }
}

fn build_lattice(k: &SimplicialComplex, a: &ArrangementArgs) -> Result<IntersectionLattice> {
    match a.space {
        SpaceArg::Diagonal => lattice::diagonal_lattice(k, a.ambient.into(), a.generators.into()),
        SpaceArg::Coordinate => {
            lattice::coordinate_lattice(k, a.ambient.into(), a.generators.into())
        }
    }
}

#[derive(Serialize)]
struct OraclePath {
    route: &'static str,
    cohomology: GradedAbelianGroup,
    agrees: bool,
}

#[derive(Serialize)]
struct CohomologyResult {
    space: ArrangementKind,
    ambient: Ambient,
    method: StratumMethod,
    generators: GeneratorSet,
    max_q: i64,
    cohomology: GradedAbelianGroup,
    /// Nonzero stratum contributions.
    terms: Vec<GmTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Vec<OraclePath>>,
}

fn cohomology(
    k: &SimplicialComplex,
    a: &ArrangementArgs,
    max_q: Option<i64>,
    method: StratumMethod,
    oracle: bool,
) -> Result<CohomologyResult> {
    let l = build_lattice(k, a)?;
    let max_q = max_q.unwrap_or(l.ambient_dimension() as i64);
    let h = gm::gm_cohomology(&l, max_q, method)?;
    let terms: Vec<GmTerm> = gm::gm_terms(&l, max_q, method)?
        .into_iter()
        .filter(|t| !t.group.is_zero())
        .collect();
    let ambient: Ambient = a.ambient.into();
    let oracle = if oracle {
        let other = match method {
            StratumMethod::OpenInterval => StratumMethod::RelativePair,
            StratumMethod::RelativePair => StratumMethod::OpenInterval,
        };
        let mut routes: Vec<(&'static str, GradedAbelianGroup)> = vec![(
            "lattice, other stratum method",
            gm::gm_cohomology(&l, max_q, other)?,
        )];
        match a.space {
            SpaceArg::Diagonal if k.common_vertex_predicate() => {
                routes.push((
                    "dual links",
                    gm::diagonal_cohomology_via_links(k, ambient, Some(max_q))?,
                ));
                routes.push((
                    "full subcomplexes",
                    gm::diagonal_cohomology_via_subcomplexes(k, ambient, Some(max_q))?,
                ));
            }
            SpaceArg::Diagonal => {}
            SpaceArg::Coordinate => {
                routes.push((
                    "full subcomplexes",
                    gm::coordinate_cohomology_via_subcomplexes(k, ambient, Some(max_q))?,
                ));
                if ambient == Ambient::Complex {
                    routes.push((
                        "moment-angle wedge",
                        bbcg_summands(k)?.cohomology.truncated(max_q),
                    ));
                }
            }
        }
        let paths: Vec<OraclePath> = routes
            .into_iter()
            .map(|(route, g)| OraclePath {
                route,
                agrees: g == h,
                cohomology: g,
            })
            .collect();
        if let Some(bad) = paths.iter().find(|p| !p.agrees) {
            return Err(Error::Integrity(format!(
                "oracle route '{}' gives {} but the lattice gives {}",
                bad.route,
                one_line(&bad.cohomology),
                one_line(&h)
            )));
        }
        Some(paths)
    } else {
        None
    };
    Ok(CohomologyResult {
        space: a.space.into(),
        ambient,
        method,
        generators: a.generators.into(),
        max_q,
        cohomology: h,
        terms,
        oracle,
    })
}

#[derive(Serialize)]
struct LatticeResult {
    lattice: LatticeDump,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual: Option<DualIsomorphism>,
}

#[derive(Serialize)]
struct MfResult {
    #[serde(flatten)]
    report: DimensionReport,
    realization: Option<Realization>,
}

fn one_line(h: &GradedAbelianGroup) -> String {
    h.render("H").replace('\n', ", ")
}

/// Human-readable output.
trait Render {
    fn render(&self, out: &mut String);
}

impl Render for CohomologyResult {
    fn render(&self, out: &mut String) {
        let space = match self.space {
            ArrangementKind::Diagonal => "diagonal",
            ArrangementKind::Coordinate => "coordinate",
        };
        let _ = writeln!(
            out,
            "{space} arrangement, {} ambient, degrees 0..={}",
            self.ambient, self.max_q
        );
        let _ = writeln!(out, "{}", self.cohomology.render("H"));
        let _ = writeln!(out, "stratum contributions:");
        for t in &self.terms {
            let _ = writeln!(
                out,
                "  {:<24} codim {:>3}  H^{} += {}",
                t.label, t.codim, t.degree, t.group
            );
        }
        if let Some(paths) = &self.oracle {
            for p in paths {
                let verdict = if p.agrees { "agrees" } else { "DIFFERS" };
                let _ = writeln!(out, "oracle {}: {verdict}", p.route);
            }
        }
    }
}

impl Render for LatticeResult {
    fn render(&self, out: &mut String) {
        let l = &self.lattice;
        let _ = writeln!(
            out,
            "{} strata, ambient dimension {}",
            l.strata.len(),
            l.ambient_dimension
        );
        for s in &l.strata {
            let mark = if s.generator { " *" } else { "" };
            let _ = writeln!(out, "  {:>3}  {:<24} d = {}{mark}", s.index, s.label, s.d);
        }
        let edges: Vec<String> = l
            .hasse_edges
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        let _ = writeln!(out, "covers: {}", edges.join(" "));
        if let Some(d) = &self.dual {
            let _ = writeln!(out, "matches dual faces: {}", d.holds);
        }
    }
}

impl Render for ProductTable {
    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "{} generators, {} pairs, {} satisfy the codimension condition, {} nonzero",
            self.generators.len(),
            self.pairs_total,
            self.pairs_codimension,
            self.nonzero_count
        );
        for e in self.entries.iter().filter(|e| e.nonzero) {
            let _ = writeln!(
                out,
                "  [{}]_{} · [{}]_{} = {} in H^{} at {}",
                e.left.label,
                e.left.index,
                e.right.label,
                e.right.index,
                e.class,
                e.degree,
                e.target_label
            );
        }
        let blocks: Vec<String> = self
            .nonzero_blocks
            .iter()
            .map(|(p, q, r)| format!("H^{p}⊗H^{q}→H^{r}"))
            .collect();
        let _ = writeln!(out, "nonzero blocks: {}", blocks.join(", "));
        if self.degenerate_dropped > 0 {
            let _ = writeln!(
                out,
                "degenerate simplices dropped: {}",
                self.degenerate_dropped
            );
        }
    }
}

impl Render for BbcgReport {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "wedge: {}", self.wedge);
        for s in &self.summands {
            let _ = writeln!(out, "  I = {}  {}", s.subset, s.rendered);
        }
        let _ = writeln!(out, "contractible summands: {}", self.trivial_count);
        let _ = writeln!(out, "{}", self.cohomology.render("H"));
    }
}

impl Render for GolodReport {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "common vertex: {}", self.common_vertex);
        let _ = writeln!(
            out,
            "coordinate products all zero: {}",
            self.coordinate_products_all_zero
        );
        let _ = writeln!(
            out,
            "Golod by the common-vertex criterion: {}",
            self.golod_certified_by_common_vertex
        );
    }
}

fn render_graded(out: &mut String, name: &str, h: Option<&GradedAbelianGroup>) {
    match h {
        Some(h) => {
            let _ = writeln!(out, "{name}: {}", one_line(h));
        }
        None => {
            let _ = writeln!(out, "{name}: not available");
        }
    }
}

impl Render for KEqualReport {
    fn render(&self, out: &mut String) {
        let _ = writeln!(
            out,
            "k-equal, m = {}, k = {}, {} ambient",
            self.m, self.k, self.ambient
        );
        if let Some(s) = self.s {
            let _ = writeln!(out, "s = {s}");
        }
        render_graded(out, "closed form", self.closed_form.as_ref());
        render_graded(out, "desuspended wedge", self.gt_wedge.as_ref());
        render_graded(
            out,
            "desuspended coordinate",
            self.coordinate_desuspended.as_ref(),
        );
        render_graded(out, "lattice", Some(&self.gm));
        let _ = writeln!(
            out,
            "computational paths agree: {}",
            self.computational_paths_agree()
        );
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
    }
}

fn render_comparison(out: &mut String, c: &AmbientComparison) {
    let _ = writeln!(
        out,
        "{} ambient: {}",
        c.ambient,
        if c.holds { "match" } else { "MISMATCH" }
    );
    for d in &c.degrees {
        if d.left.is_zero() && d.right.is_zero() {
            continue;
        }
        let mark = if d.equal { "" } else { "  <-- differs" };
        let _ = writeln!(out, "  q = {:>2}: {} | {}{mark}", d.degree, d.left, d.right);
    }
}

impl Render for SuspensionReport {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "{}: {}", self.statement, self.holds);
        render_comparison(out, &self.complex);
        render_comparison(out, &self.real);
    }
}

impl Render for ConeReport {
    fn render(&self, out: &mut String) {
        let _ = writeln!(out, "{}: {}", self.statement, self.holds);
        render_comparison(out, &self.complex);
        render_comparison(out, &self.real);
    }
}

impl Render for MfResult {
    fn render(&self, out: &mut String) {
        let r = &self.report;
        let mf: Vec<String> = r.missing_faces.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(out, "missing faces: {}", mf.join(" "));
        let _ = writeln!(out, "common_vertex = {}", r.common_vertex);
        match r.dim {
            Some(d) => {
                let _ = writeln!(out, "dim = {d}");
            }
            None => {
                let _ = writeln!(out, "dim = none");
            }
        }
        let _ = writeln!(out, "neighbourliness = {}", r.neighbourliness);
        if !r.ghost_vertices.is_empty() {
            let _ = writeln!(out, "ghost vertices: {}", r.ghost_vertices);
        }
        if let Some(z) = &self.realization {
            let facets: Vec<String> = z.complex.facets().iter().map(|f| f.to_string()).collect();
            let _ = writeln!(
                out,
                "coordinate realization: link of vertex {} on {} vertices, facets {}",
                z.vertex,
                z.complex.m(),
                facets.join(" ")
            );
        }
    }
}
