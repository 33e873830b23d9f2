//! Disk cache for free resolutions.
//!
//! Building a resolution (especially with the generic builder) is the
//! expensive step of a session, so finished resolutions can be persisted as
//! JSON documents keyed by `(group name, builder, length, pivot seed)`.
//! Loaded documents are decoded back into [`FreeResolution`] values and
//! fully re-validated — `d∘d = 0`, exactness, augmentation — before being
//! served; anything missing, stale, or malformed counts as a cache miss and
//! is rebuilt.  Writes go through a temporary file plus rename so concurrent
//! readers never observe a half-written document.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gring::{GRingMatrix, GVec};
use crate::group::FiniteGroup;
use crate::resolution::{FreeResolution, ResolutionKind};

/// Deterministic short hash (FNV-1a) so arbitrary group names become
/// collision-resistant, portable file names.
fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// File a resolution with this key lives in (whether or not it exists yet).
pub fn cache_file(dir: &Path, group: &str, builder: &str, length: usize, seed: u64) -> PathBuf {
    let key = format!("{group}|{builder}|{length}|{seed}");
    dir.join(format!(
        "{}-{builder}-L{length}-S{seed}-{:016x}.json",
        sanitize(group),
        fnv1a(&key)
    ))
}

fn kind_value(kind: &ResolutionKind) -> Value {
    match kind {
        ResolutionKind::Periodic => json!({ "builder": "periodic" }),
        ResolutionKind::Generic => json!({ "builder": "generic" }),
        ResolutionKind::Tensor { left_ranks, right_ranks } => json!({
            "builder": "tensor",
            "left_ranks": left_ranks,
            "right_ranks": right_ranks,
        }),
        ResolutionKind::Restricted { ambient } => json!({
            "builder": "restricted",
            "ambient": ambient,
        }),
    }
}

fn usize_list(v: &Value) -> Option<Vec<usize>> {
    v.as_array()?
        .iter()
        .map(|x| x.as_u64().map(|n| n as usize))
        .collect()
}

fn kind_from_value(v: &Value) -> Option<ResolutionKind> {
    match v.get("builder")?.as_str()? {
        "periodic" => Some(ResolutionKind::Periodic),
        "generic" => Some(ResolutionKind::Generic),
        "tensor" => Some(ResolutionKind::Tensor {
            left_ranks: usize_list(v.get("left_ranks")?)?,
            right_ranks: usize_list(v.get("right_ranks")?)?,
        }),
        "restricted" => Some(ResolutionKind::Restricted {
            ambient: v.get("ambient")?.as_str()?.to_string(),
        }),
        _ => None,
    }
}

fn bigint_strings(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn bigints_from(v: &Value) -> Option<Vec<BigInt>> {
    v.as_array()?
        .iter()
        .map(|x| x.as_str()?.parse::<BigInt>().ok())
        .collect()
}

/// Persist a resolution.  Errors are real I/O problems (unwritable cache
/// directory), not correctness issues.
pub fn store(dir: &Path, res: &FreeResolution) -> Result<()> {
    fs::create_dir_all(dir)
        .map_err(|e| Error::Cache(format!("cannot create cache directory {}: {e}", dir.display())))?;
    let mut boundaries = Vec::with_capacity(res.length());
    for k in 1..=res.length() {
        let d = res.boundary(k);
        let rows: Vec<Value> = (0..d.rows())
            .map(|i| Value::Array((0..d.cols()).map(|j| bigint_strings(&d.get(i, j).coeffs)).collect()))
            .collect();
        boundaries.push(Value::Array(rows));
    }
    let doc = json!({
        "group": res.group().name(),
        "order": res.group().order(),
        "kind": kind_value(res.kind()),
        "length": res.length(),
        "seed": res.seed(),
        "ranks": res.ranks(),
        "augmentation": bigint_strings(res.augmentation()),
        "boundaries": boundaries,
    });
    let path = cache_file(dir, res.group().name(), res.kind().builder_name(), res.length(), res.seed());
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&doc).expect("JSON document").as_bytes())
        .map_err(|e| Error::Cache(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, &path)
        .map_err(|e| Error::Cache(format!("cannot finish writing {}: {e}", path.display())))?;
    Ok(())
}

fn decode(doc: &Value, group: &FiniteGroup, builder: &str, length: usize, seed: u64) -> Option<FreeResolution> {
    if doc.get("group")?.as_str()? != group.name()
        || doc.get("order")?.as_u64()? as usize != group.order()
        || doc.get("length")?.as_u64()? as usize != length
        || doc.get("seed")?.as_u64()? != seed
    {
        return None;
    }
    let kind = kind_from_value(doc.get("kind")?)?;
    if kind.builder_name() != builder {
        return None;
    }
    let ranks = usize_list(doc.get("ranks")?)?;
    if ranks.len() != length + 1 {
        return None;
    }
    let augmentation = bigints_from(doc.get("augmentation")?)?;
    let stored = doc.get("boundaries")?.as_array()?;
    if stored.len() != length {
        return None;
    }
    let n = group.order();
    let mut boundaries = Vec::with_capacity(length);
    for (k, rows) in stored.iter().enumerate() {
        let rows = rows.as_array()?;
        let (r, c) = (ranks[k], ranks[k + 1]);
        if rows.len() != r {
            return None;
        }
        let mut m = GRingMatrix::zeros(group, r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_array()?;
            if row.len() != c {
                return None;
            }
            for (j, entry) in row.iter().enumerate() {
                let coeffs = bigints_from(entry)?;
                if coeffs.len() != n {
                    return None;
                }
                m.set(i, j, GVec { coeffs });
            }
        }
        boundaries.push(m);
    }
    let res = FreeResolution::from_parts(group.clone(), ranks, boundaries, augmentation, kind, seed);
    res.validate().ok()?;
    Some(res)
}

/// Load and re-validate a cached resolution; `None` on any miss, including
/// decode or validation failures.
pub fn load(dir: &Path, group: &FiniteGroup, builder: &str, length: usize, seed: u64) -> Option<FreeResolution> {
    let path = cache_file(dir, group.name(), builder, length, seed);
    let text = fs::read_to_string(path).ok()?;
    let doc: Value = serde_json::from_str(&text).ok()?;
    decode(&doc, group, builder, length, seed)
}
