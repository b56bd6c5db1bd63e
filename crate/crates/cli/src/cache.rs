//! Persistent KL tables, one file per `(Coxeter matrix, φ)`.
//!
//! Files are named `kl-<sha256>.json`, the hash being taken over the
//! canonical JSON of `{format, version, matrix, phi}`. The payload is
//! canonical JSON (sorted keys, no whitespace) with polynomial coefficients
//! as decimal strings. On load a random 1% of the columns `c_w` (at least
//! one) is recomputed from the stored lower columns; any mismatch or parse
//! error discards the file and recomputes.

use anyhow::{bail, Context, Result};
use involcells::coxeter::CoxeterGroup;
use involcells::hecke::{Expansion, KLTable, WeightFunction};
use involcells::numfield::ZPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub const FORMAT: &str = "involcells-kl";
pub const VERSION: u32 = 1;
/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "INVOLCELLS_CACHE";

type Poly = Vec<(i64, String)>;
type StoredExpansion = Vec<(u32, Poly)>;

#[derive(Serialize, Deserialize)]
struct Entry {
    format: String,
    version: u32,
    key: String,
    group: String,
    matrix: Vec<Vec<u32>>,
    phi: Vec<i64>,
    basis: Vec<StoredExpansion>,
    left: Vec<StoredExpansion>,
}

#[derive(Deserialize)]
struct Header {
    format: String,
    version: u32,
    key: String,
    group: String,
    phi: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Disabled,
    Hit,
    Miss,
    /// the stored file was unusable; the reason is kept
    Recomputed(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct CacheListing {
    pub file: String,
    pub group: String,
    pub phi: Vec<i64>,
    pub bytes: u64,
}

pub fn canonical_json<T: Serialize>(x: &T) -> Result<Vec<u8>> {
    // serde_json::Value keeps object keys in a BTreeMap
    Ok(serde_json::to_vec(&serde_json::to_value(x)?)?)
}

pub fn cache_key(g: &CoxeterGroup, phi: &WeightFunction) -> Result<String> {
    let id = serde_json::json!({
        "format": FORMAT,
        "version": VERSION,
        "matrix": g.system().matrix(),
        "phi": phi.values(),
    });
    Ok(hex::encode(Sha256::digest(canonical_json(&id)?)))
}

fn store_poly(p: &ZPoly) -> Poly {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn load_poly(p: &Poly) -> Result<ZPoly> {
    let terms = p
        .iter()
        .map(|(e, c)| Ok((*e, c.parse::<BigInt>().with_context(|| format!("coefficient {c:?}"))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZPoly::from_terms(terms))
}

fn store_expansions(x: &[Expansion]) -> Vec<StoredExpansion> {
    x.iter().map(|e| e.iter().map(|(y, p)| (*y, store_poly(p))).collect()).collect()
}

fn load_expansions(x: &[StoredExpansion]) -> Result<Vec<Expansion>> {
    x.iter().map(|e| e.iter().map(|(y, p)| Ok((*y, load_poly(p)?))).collect()).collect()
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: PathBuf) -> Self {
        Cache { dir }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("kl-{key}.json"))
    }

    fn cache_files(&self) -> Result<Vec<PathBuf>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut out: Vec<PathBuf> = fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
                name.starts_with("kl-") && name.ends_with(".json")
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn store(&self, kl: &KLTable) -> Result<PathBuf> {
        let g = kl.group();
        let key = cache_key(g, kl.weights())?;
        let entry = Entry {
            format: FORMAT.into(),
            version: VERSION,
            key: key.clone(),
            group: g.system().label(),
            matrix: g.system().matrix().to_vec(),
            phi: kl.weights().values().to_vec(),
            basis: store_expansions(kl.basis_expansions()),
            left: store_expansions(kl.left_expansions()),
        };
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(&canonical_json(&entry)?)?;
        tmp.as_file().sync_all()?;
        let path = self.path_for(&key);
        tmp.persist(&path)?;
        Ok(path)
    }

    /// Read and validate a stored table; `Ok(None)` if there is none.
    pub fn load(&self, g: Arc<CoxeterGroup>, phi: WeightFunction) -> Result<Option<KLTable>> {
        let key = cache_key(&g, &phi)?;
        let path = self.path_for(&key);
        if !path.exists() {
            return Ok(None);
        }
        let bytes = fs::read(&path)?;
        let entry: Entry = serde_json::from_slice(&bytes).context("parsing cache file")?;
        if entry.format != FORMAT || entry.version != VERSION {
            bail!("cache format {} v{} is not {FORMAT} v{VERSION}", entry.format, entry.version);
        }
        if entry.key != key || entry.matrix != g.system().matrix() || entry.phi != phi.values() {
            bail!("cache file {} does not describe this group and weight function", path.display());
        }
        let kl = KLTable::from_parts(g, phi, load_expansions(&entry.basis)?, load_expansions(&entry.left)?)?;
        // c_e = T_e is not recomputed, so sample among w ≠ e
        let n = kl.group().order() - 1;
        if n > 0 {
            let k = n.div_ceil(100).clamp(1, n);
            let sample: Vec<usize> = rand::seq::index::sample(&mut rand::rng(), n, k).iter().map(|w| w + 1).collect();
            kl.recheck(&sample)?;
        }
        Ok(Some(kl))
    }

    pub fn load_or_build(&self, g: Arc<CoxeterGroup>, phi: WeightFunction) -> Result<(KLTable, CacheOutcome)> {
        let outcome = match self.load(g.clone(), phi.clone()) {
            Ok(Some(kl)) => return Ok((kl, CacheOutcome::Hit)),
            Ok(None) => CacheOutcome::Miss,
            Err(e) => {
                eprintln!("warning: discarding cached KL table: {e:#}");
                CacheOutcome::Recomputed(format!("{e:#}"))
            }
        };
        let kl = KLTable::build(g, phi)?;
        self.store(&kl)?;
        Ok((kl, outcome))
    }

    pub fn list(&self) -> Result<Vec<CacheListing>> {
        self.cache_files()?
            .into_iter()
            .map(|p| {
                let h: Header = serde_json::from_slice(&fs::read(&p)?)
                    .with_context(|| format!("reading {}", p.display()))?;
                let file = p.file_name().unwrap().to_string_lossy().into_owned();
                let stale = if h.format != FORMAT || h.version != VERSION || !file.contains(&h.key) {
                    " (stale)"
                } else {
                    ""
                };
                Ok(CacheListing {
                    file,
                    group: format!("{}{stale}", h.group),
                    phi: h.phi,
                    bytes: fs::metadata(&p)?.len(),
                })
            })
            .collect()
    }

    /// Remove every cache file; returns how many were removed.
    pub fn purge(&self) -> Result<usize> {
        let files = self.cache_files()?;
        for p in &files {
            fs::remove_file(p)?;
        }
        Ok(files.len())
    }
}
