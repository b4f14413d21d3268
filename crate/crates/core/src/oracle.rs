//! Black-box vertex colorings with query accounting.
//!
//! A [`ColoringOracle`] answers `color_of` for vertices of one graph family
//! member. It is backed by a table, a named rule, or an arbitrary closure
//! (used to compose oracles in reductions and simulations). The query
//! counter is the only mutable state and is updated atomically.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{Family, GraphFamilySpec};
use crate::set::ElementSet;

/// Colors are 1-based: a palette of size `m` is `[1, m]`.
pub type Color = usize;

pub type ColorFn = dyn Fn(&ElementSet) -> Result<Color> + Send + Sync;

/// Named coloring rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// Every vertex gets color 1.
    Constant,
    /// `min(min(A), m)`.
    MinElementCapped,
    /// Color `i` for vertices with minimum `i <= n - 2k + 1`, color
    /// `n - 2k + 2` for the rest; clamped to `m` when the palette is
    /// smaller. Proper on `K(n, k)` when `m = n - 2k + 2`.
    ProperLovasz,
    /// Uniform color in `[1, m]`, a pure function of seed and vertex.
    Random { seed: u64 },
}

impl Rule {
    pub fn parse(name: &str, seed: u64) -> Result<Self> {
        match name {
            "constant" => Ok(Rule::Constant),
            "min-element-capped" => Ok(Rule::MinElementCapped),
            "proper-lovasz" => Ok(Rule::ProperLovasz),
            "random" => Ok(Rule::Random { seed }),
            other => Err(Error::UnknownRule(other.to_string())),
        }
    }

    fn apply(&self, spec: &GraphFamilySpec, palette: usize, a: &ElementSet) -> Color {
        let min = a.first().unwrap_or(1);
        match *self {
            Rule::Constant => 1,
            Rule::MinElementCapped => min.min(palette),
            Rule::ProperLovasz => {
                let cap = spec.n - 2 * spec.k + 1;
                let c = if min <= cap { min } else { cap + 1 };
                c.min(palette)
            }
            Rule::Random { seed } => {
                let key = a.iter().fold(seed, |h, e| mix(h ^ e as u64));
                ChaCha8Rng::seed_from_u64(key).random_range(1..=palette)
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Constant => f.write_str("constant"),
            Rule::MinElementCapped => f.write_str("min-element-capped"),
            Rule::ProperLovasz => f.write_str("proper-lovasz"),
            Rule::Random { seed } => write!(f, "random,{seed}"),
        }
    }
}

// splitmix64 finalizer
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone)]
pub enum ColoringSource {
    Table(Arc<HashMap<ElementSet, Color>>),
    Rule(Rule),
    Composed(Arc<ColorFn>),
}

impl fmt::Debug for ColoringSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringSource::Table(t) => write!(f, "Table({} entries)", t.len()),
            ColoringSource::Rule(r) => write!(f, "Rule({r})"),
            ColoringSource::Composed(_) => f.write_str("Composed"),
        }
    }
}

/// Queryable coloring of the vertices of `spec` with palette `[1, m]`.
#[derive(Debug)]
pub struct ColoringOracle {
    spec: GraphFamilySpec,
    palette: usize,
    source: ColoringSource,
    queries: AtomicU64,
}

impl ColoringOracle {
    fn with_source(spec: GraphFamilySpec, palette: usize, source: ColoringSource) -> Result<Self> {
        if palette == 0 {
            return Err(Error::InvalidParameters("palette size must be at least 1".into()));
        }
        Ok(Self { spec, palette, source, queries: AtomicU64::new(0) })
    }

    pub fn from_rule(spec: GraphFamilySpec, palette: usize, rule: Rule) -> Result<Self> {
        Self::with_source(spec, palette, ColoringSource::Rule(rule))
    }

    /// Table-backed oracle. Entries must be vertices of `spec` with colors in
    /// the palette; vertices absent from the table fail on query.
    pub fn from_table(spec: GraphFamilySpec, palette: usize, table: HashMap<ElementSet, Color>) -> Result<Self> {
        for (v, &c) in &table {
            if !spec.is_vertex(v)? {
                return Err(Error::NotAVertex(v.clone()));
            }
            if c == 0 || c > palette {
                return Err(Error::OutOfPalette { color: c, palette });
            }
        }
        Self::with_source(spec, palette, ColoringSource::Table(Arc::new(table)))
    }

    pub fn from_fn(
        spec: GraphFamilySpec,
        palette: usize,
        f: impl Fn(&ElementSet) -> Result<Color> + Send + Sync + 'static,
    ) -> Result<Self> {
        Self::with_source(spec, palette, ColoringSource::Composed(Arc::new(f)))
    }

    pub fn spec(&self) -> &GraphFamilySpec {
        &self.spec
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn source(&self) -> &ColoringSource {
        &self.source
    }

    /// Number of `color_of` calls so far.
    pub fn queries(&self) -> u64 {
        self.queries.load(Ordering::Relaxed)
    }

    /// Color of vertex `a`. Every call counts as one query, including calls
    /// that fail.
    pub fn color_of(&self, a: &ElementSet) -> Result<Color> {
        self.queries.fetch_add(1, Ordering::Relaxed);
        if !self.spec.is_vertex(a)? {
            return Err(Error::NotAVertex(a.clone()));
        }
        let color = match &self.source {
            ColoringSource::Table(t) => *t.get(a).ok_or_else(|| Error::MissingVertex(a.clone()))?,
            ColoringSource::Rule(r) => r.apply(&self.spec, self.palette, a),
            ColoringSource::Composed(f) => f(a)?,
        };
        if color == 0 || color > self.palette {
            return Err(Error::OutOfPalette { color, palette: self.palette });
        }
        Ok(color)
    }

    /// Writes the coloring file for every vertex of the spec, querying the
    /// oracle once per vertex.
    pub fn save(&self, path: impl AsRef<Path>, vertex_cap: usize) -> Result<()> {
        let text = self.to_table_text(vertex_cap)?;
        let mut file = fs::File::create(path)?;
        file.write_all(text.as_bytes())?;
        Ok(())
    }

    /// The coloring file contents: a header `n k m family`, then one
    /// `<elements> <color>` line per vertex in lexicographic order.
    pub fn to_table_text(&self, vertex_cap: usize) -> Result<String> {
        let count = self.spec.vertex_count();
        if count > BigUint::from(vertex_cap) {
            return Err(Error::CapExceeded { count: count.to_string(), cap: vertex_cap });
        }
        let mut out = format!("{} {} {} {}\n", self.spec.n, self.spec.k, self.palette, self.spec.family);
        for v in self.spec.vertices() {
            let c = self.color_of(&v)?;
            out.push_str(&format!("{v} {c}\n"));
        }
        Ok(out)
    }
}

/// Rule-backed oracle by rule name (`constant`, `min-element-capped`,
/// `proper-lovasz`, `random`).
pub fn make_rule_coloring(spec: GraphFamilySpec, palette: usize, rule: &str, seed: u64) -> Result<ColoringOracle> {
    ColoringOracle::from_rule(spec, palette, Rule::parse(rule, seed)?)
}

/// Reads a coloring table file.
pub fn load_coloring(path: impl AsRef<Path>) -> Result<ColoringOracle> {
    parse_coloring(&fs::read_to_string(path)?)
}

pub fn save_coloring(oracle: &ColoringOracle, path: impl AsRef<Path>, vertex_cap: usize) -> Result<()> {
    oracle.save(path, vertex_cap)
}

/// Parses the coloring table format. `#` starts a comment; blank lines are
/// ignored.
pub fn parse_coloring(text: &str) -> Result<ColoringOracle> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (line_no, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let bad_header = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
    if fields.len() != 4 {
        return Err(bad_header("header must be `n k m family`"));
    }
    let num = |s: &str| usize::from_str(s).map_err(|_| bad_header(&format!("bad number {s:?}")));
    let (n, k, m) = (num(fields[0])?, num(fields[1])?, num(fields[2])?);
    let family: Family = fields[3].parse().map_err(|_| bad_header("unknown family"))?;
    let spec = GraphFamilySpec::new(family, n, k)?;
    if m == 0 {
        return Err(bad_header("palette size must be at least 1"));
    }

    let mut table = HashMap::new();
    for (line, content) in lines {
        let err = |msg: String| Error::Parse { line, msg };
        let parts: Vec<&str> = content.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(err(format!("expected `<elements> <color>`, got {content:?}")));
        }
        let v = ElementSet::parse(n, parts[0]).map_err(|e| err(e.to_string()))?;
        if !spec.is_vertex(&v).map_err(|e| err(e.to_string()))? {
            return Err(err(format!("{v} is not a vertex of {spec}")));
        }
        let c: usize = parts[1].parse().map_err(|_| err(format!("bad color {:?}", parts[1])))?;
        if c == 0 || c > m {
            return Err(err(format!("color {c} outside [1, {m}]")));
        }
        if table.insert(v.clone(), c).is_some() {
            return Err(err(format!("duplicate vertex {v}")));
        }
    }
    ColoringOracle::from_table(spec, m, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, els: &[usize]) -> ElementSet {
        ElementSet::new(n, els.iter().copied()).unwrap()
    }

    #[test]
    fn rules() {
        let s62 = GraphFamilySpec::schrijver(6, 2).unwrap();
        let c = make_rule_coloring(s62, 3, "constant", 0).unwrap();
        assert_eq!(c.color_of(&set(6, &[2, 5])).unwrap(), 1);
        let c = make_rule_coloring(s62, 3, "min-element-capped", 0).unwrap();
        assert_eq!(c.color_of(&set(6, &[2, 5])).unwrap(), 2);
        assert_eq!(c.color_of(&set(6, &[4, 6])).unwrap(), 3);
        assert!(make_rule_coloring(s62, 3, "rainbow", 0).is_err());
        assert!(make_rule_coloring(s62, 0, "constant", 0).is_err());
    }

    #[test]
    fn proper_lovasz_on_petersen() {
        let k52 = GraphFamilySpec::kneser(5, 2).unwrap();
        let c = make_rule_coloring(k52, 3, "proper-lovasz", 0).unwrap();
        assert_eq!(c.color_of(&set(5, &[1, 2])).unwrap(), 1);
        assert_eq!(c.color_of(&set(5, &[2, 3])).unwrap(), 2);
        assert_eq!(c.color_of(&set(5, &[3, 4])).unwrap(), 3);
        assert_eq!(c.color_of(&set(5, &[4, 5])).unwrap(), 3);
    }

    #[test]
    fn random_rule_is_deterministic() {
        let spec = GraphFamilySpec::kneser(9, 3).unwrap();
        let c = make_rule_coloring(spec, 5, "random", 7).unwrap();
        let v = set(9, &[2, 4, 8]);
        assert_eq!(c.color_of(&v).unwrap(), c.color_of(&v).unwrap());
        let d = make_rule_coloring(spec, 5, "random", 7).unwrap();
        for v in spec.vertices() {
            assert_eq!(c.color_of(&v).unwrap(), d.color_of(&v).unwrap());
        }
    }

    #[test]
    fn query_counter_and_vertex_check() {
        let s62 = GraphFamilySpec::schrijver(6, 2).unwrap();
        let c = make_rule_coloring(s62, 3, "constant", 0).unwrap();
        assert_eq!(c.queries(), 0);
        c.color_of(&set(6, &[1, 3])).unwrap();
        c.color_of(&set(6, &[1, 3])).unwrap();
        assert!(matches!(c.color_of(&set(6, &[1, 2])), Err(Error::NotAVertex(_))));
        assert_eq!(c.queries(), 3);
    }

    #[test]
    fn table_round_trip() {
        let s62 = GraphFamilySpec::schrijver(6, 2).unwrap();
        let rule = make_rule_coloring(s62, 3, "min-element-capped", 0).unwrap();
        let text = rule.to_table_text(100).unwrap();
        assert_eq!(text.lines().count(), 10);
        assert!(text.starts_with("6 2 3 schrijver\n1,3 1\n"));
        let table = parse_coloring(&text).unwrap();
        for v in s62.vertices() {
            assert_eq!(table.color_of(&v).unwrap(), rule.color_of(&v).unwrap());
        }
    }

    #[test]
    fn table_parsing_errors() {
        let ok = "# comment\n6 2 3 schrijver\n1,3 2  # trailing\n";
        let c = parse_coloring(ok).unwrap();
        assert_eq!(c.color_of(&set(6, &[1, 3])).unwrap(), 2);
        assert!(matches!(c.color_of(&set(6, &[2, 4])), Err(Error::MissingVertex(_))));

        assert!(parse_coloring("6 2 3 schrijver\n1,3 0\n").is_err());
        assert!(parse_coloring("6 2 3 schrijver\n1,3 4\n").is_err());
        assert!(parse_coloring("6 2 3 schrijver\n1,3 1\n1,3 2\n").is_err());
        assert!(parse_coloring("6 2 3 schrijver\n1,2 1\n").is_err());
        assert!(parse_coloring("6 2 3 schrijver\n1,3\n").is_err());
        assert!(parse_coloring("6 2 schrijver\n").is_err());
        assert!(parse_coloring("6 2 3 petersen\n").is_err());
        assert!(parse_coloring("").is_err());
    }

    #[test]
    fn save_and_load_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.txt");
        let spec = GraphFamilySpec::schrijver(8, 3).unwrap();
        let rule = make_rule_coloring(spec, 3, "random", 11).unwrap();
        save_coloring(&rule, &path, 100).unwrap();
        let loaded = load_coloring(&path).unwrap();
        assert_eq!(loaded.palette(), 3);
        for v in spec.vertices() {
            assert_eq!(loaded.color_of(&v).unwrap(), rule.color_of(&v).unwrap());
        }
        assert!(rule.save(&path, 1).is_err());
    }
}
