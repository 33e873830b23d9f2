//! Finite groups stored extensionally as multiplication tables, plus the
//! expression grammar the CLI uses to build them.
//!
//! Elements are indices into the table. Constructors validate the full
//! group axioms (closure, identity, inverses, associativity) and that the
//! declared generators actually generate; group order is capped at 64.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupStructure {
    Cyclic(usize),
    Product { left: Box<FiniteGroup>, right: Box<FiniteGroup> },
    SemidirectZ2 { base: Box<FiniteGroup>, aut_images: Vec<usize>, aut_name: String },
    Quaternion,
    Subgroup { ambient: String, elements: Vec<usize> },
    Opaque,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    generators: Vec<(String, usize)>,
    labels: Vec<String>,
    structure: GroupStructure,
}

impl FiniteGroup {
    pub fn from_table(
        name: String,
        mult: Vec<Vec<usize>>,
        labels: Vec<String>,
        generators: Vec<(String, usize)>,
        structure: GroupStructure,
    ) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::ResourceLimit(format!("group order {n} exceeds {MAX_ORDER}")));
        }
        if labels.len() != n || mult.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidGroup("table is not square".into()));
        }
        let flat: Vec<usize> = mult.iter().flatten().copied().collect();
        if flat.iter().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("entry out of range".into()));
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mult[e][g] == g && mult[g][e] == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;

        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mult[g][h] == identity && mult[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("no inverse for element {g}")))?;
        }

        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }

        let g = FiniteGroup { name, order: n, mult: flat, inv, identity, generators, labels, structure };
        let reached = g.closure(&g.generators.iter().map(|(_, i)| *i).collect::<Vec<_>>());
        if reached.len() != n {
            return Err(Error::NotGenerating { reached: reached.len(), order: n });
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|(_, i)| *i)
    }

    pub fn structure(&self) -> &GroupStructure {
        &self.structure
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Smallest-index element of full order, if the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order).find(|&g| self.element_order(g) == self.order)
    }

    pub fn power(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut out = self.identity;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(g) = frontier.pop() {
            for &s in gens {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    frontier.push(h);
                }
            }
        }
        (0..self.order).filter(|&i| seen[i]).collect()
    }

    /// Subgroup generated by `gens`: the subgroup as a group of its own,
    /// plus the map from subgroup indices to ambient indices (sorted
    /// ascending, so the construction is canonical).
    pub fn subgroup(&self, gens: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let elements = self.closure(gens);
        let pos: std::collections::BTreeMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let n = elements.len();
        let mult: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| pos[&self.mul(elements[a], elements[b])]).collect())
            .collect();
        let labels = elements.iter().map(|&g| self.labels[g].clone()).collect();
        let generators = gens
            .iter()
            .map(|&g| (self.labels[g].clone(), pos[&g]))
            .collect();
        let name = format!(
            "sub({},[{}])",
            self.name,
            gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(",")
        );
        let structure = GroupStructure::Subgroup { ambient: self.name.clone(), elements: elements.clone() };
        let g = FiniteGroup::from_table(name, mult, labels, generators, structure)?;
        Ok((g, elements))
    }

    /// Index of `(a, b)` when the group was built as a product.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        match &self.structure {
            GroupStructure::Product { right, .. } => a * right.order() + b,
            _ => panic!("not a product group"),
        }
    }

    /// Index of `(n, s)` when the group was built as a semidirect product
    /// with Z/2.
    pub fn semidirect_index(&self, n: usize, s: usize) -> usize {
        match &self.structure {
            GroupStructure::SemidirectZ2 { base, .. } => s * base.order() + n,
            _ => panic!("not a semidirect product"),
        }
    }

    pub fn semidirect_parts(&self, g: usize) -> (usize, usize) {
        match &self.structure {
            GroupStructure::SemidirectZ2 { base, .. } => (g % base.order(), g / base.order()),
            _ => panic!("not a semidirect product"),
        }
    }
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic group of order 0".into()));
    }
    let mult: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    let gen_name = if n == 2 { "t" } else { "b" };
    let generators = if n == 1 { vec![] } else { vec![(gen_name.to_string(), 1)] };
    FiniteGroup::from_table(format!("C{n}"), mult, labels, generators, GroupStructure::Cyclic(n))
}

pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > MAX_ORDER {
        return Err(Error::ResourceLimit(format!("product order {n} exceeds {MAX_ORDER}")));
    }
    let idx = |x: usize, y: usize| x * nb + y;
    let mut mult = vec![vec![0; n]; n];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    mult[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    let labels = (0..n)
        .map(|g| format!("({},{})", a.label(g / nb), b.label(g % nb)))
        .collect();
    let mut generators = Vec::new();
    let collide = |name: &str| {
        a.generators().iter().any(|(n, _)| n == name) && b.generators().iter().any(|(n, _)| n == name)
    };
    for (name, g) in a.generators() {
        let n2 = if collide(name) { format!("{name}1") } else { name.clone() };
        generators.push((n2, idx(*g, b.identity())));
    }
    for (name, g) in b.generators() {
        let n2 = if collide(name) { format!("{name}2") } else { name.clone() };
        generators.push((n2, idx(a.identity(), *g)));
    }
    FiniteGroup::from_table(
        format!("prod({},{})", a.name(), b.name()),
        mult,
        labels,
        generators,
        GroupStructure::Product { left: Box::new(a.clone()), right: Box::new(b.clone()) },
    )
}

/// Semidirect product `base ⋊ Z/2` for an involutive automorphism given by
/// its image table. Multiplication: `(n1,s1)(n2,s2) = (n1·σ^{s1}(n2), s1+s2)`.
pub fn semidirect_z2(base: &FiniteGroup, aut_images: &[usize], aut_name: &str) -> Result<FiniteGroup> {
    let nb = base.order();
    if aut_images.len() != nb {
        return Err(Error::InvalidGroup("automorphism table has wrong length".into()));
    }
    for g in 0..nb {
        if aut_images[aut_images[g]] != g {
            return Err(Error::InvalidGroup(format!(
                "automorphism {aut_name} is not order-2 at element {g}"
            )));
        }
    }
    for g in 0..nb {
        for h in 0..nb {
            if aut_images[base.mul(g, h)] != base.mul(aut_images[g], aut_images[h]) {
                return Err(Error::NotAHomomorphism { witness: format!("{aut_name}({g}*{h})") });
            }
        }
    }
    let n = 2 * nb;
    if n > MAX_ORDER {
        return Err(Error::ResourceLimit(format!("semidirect order {n} exceeds {MAX_ORDER}")));
    }
    let idx = |m: usize, s: usize| s * nb + m;
    let mut mult = vec![vec![0; n]; n];
    for m1 in 0..nb {
        for s1 in 0..2usize {
            for m2 in 0..nb {
                for s2 in 0..2usize {
                    let m2t = if s1 == 1 { aut_images[m2] } else { m2 };
                    mult[idx(m1, s1)][idx(m2, s2)] = idx(base.mul(m1, m2t), (s1 + s2) % 2);
                }
            }
        }
    }
    let labels = (0..n).map(|g| format!("({},{})", base.label(g % nb), g / nb)).collect();
    let mut generators: Vec<(String, usize)> = base
        .generators()
        .iter()
        .map(|(name, g)| {
            let n2 = if name == "t" { "t1".to_string() } else { name.clone() };
            (n2, idx(*g, 0))
        })
        .collect();
    generators.push(("t".to_string(), idx(base.identity(), 1)));
    FiniteGroup::from_table(
        format!("sdz2({},{aut_name})", base.name()),
        mult,
        labels,
        generators,
        GroupStructure::SemidirectZ2 {
            base: Box::new(base.clone()),
            aut_images: aut_images.to_vec(),
            aut_name: aut_name.to_string(),
        },
    )
}

pub fn quaternion8() -> FiniteGroup {
    // elements: 1, -1, i, -i, j, -j, k, -k
    let axis = |g: usize| g / 2; // 0=1, 1=i, 2=j, 3=k
    let sign = |g: usize| g % 2; // 0 = +, 1 = -
    let axis_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mult: Vec<Vec<usize>> = (0..8)
        .map(|g| {
            (0..8)
                .map(|h| {
                    let (ax, s) = axis_mul(axis(g), axis(h));
                    ax * 2 + (sign(g) + sign(h) + s) % 2
                })
                .collect()
        })
        .collect();
    let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].map(String::from).to_vec();
    let generators = vec![("i".to_string(), 2), ("j".to_string(), 4)];
    FiniteGroup::from_table("Q8".into(), mult, labels, generators, GroupStructure::Quaternion)
        .expect("quaternion table is a group")
}

/// Resolve one of the named automorphisms used in group expressions.
pub fn named_automorphism(g: &FiniteGroup, name: &str) -> Result<Vec<usize>> {
    match name {
        "identity" => Ok((0..g.order()).collect()),
        "invert" => {
            if !g.is_abelian() {
                return Err(Error::InvalidGroup("invert is only an automorphism of abelian groups".into()));
            }
            Ok((0..g.order()).map(|x| g.inv(x)).collect())
        }
        "swap" => match g.structure() {
            GroupStructure::Product { left, right } if left == right => {
                let nb = right.order();
                Ok((0..g.order()).map(|x| (x % nb) * nb + x / nb).collect())
            }
            _ => Err(Error::InvalidGroup("swap needs a product of two equal factors".into())),
        },
        "invert_left" => match g.structure() {
            GroupStructure::Product { left, right } => {
                if !left.is_abelian() {
                    return Err(Error::InvalidGroup("invert_left needs an abelian left factor".into()));
                }
                let nb = right.order();
                Ok((0..g.order()).map(|x| left.inv(x / nb) * nb + x % nb).collect())
            }
            _ => Err(Error::InvalidGroup("invert_left needs a product group".into())),
        },
        "invert_base" => match g.structure() {
            GroupStructure::SemidirectZ2 { base, .. } => {
                if !base.is_abelian() {
                    return Err(Error::InvalidGroup("invert_base needs an abelian base".into()));
                }
                let nb = base.order();
                Ok((0..g.order()).map(|x| (x / nb) * nb + base.inv(x % nb)).collect())
            }
            _ => Err(Error::InvalidGroup("invert_base needs a semidirect product".into())),
        },
        other => Err(Error::Parse(format!("unknown automorphism name {other:?}"))),
    }
}

/// Expression grammar for groups and Z-extensions, as accepted by the CLI
/// (either a preset name or inline JSON).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupExpr {
    Cyclic(usize),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    SemidirectZ2 { base: Box<GroupExpr>, aut: String },
    Quaternion8,
    ZExtension { fiber: Box<GroupExpr>, theta: String },
}

impl GroupExpr {
    pub fn parse(s: &str) -> Result<GroupExpr> {
        let t = s.trim();
        let preset = match t {
            "Z2" => Some(GroupExpr::Cyclic(2)),
            "Z4" => Some(GroupExpr::Cyclic(4)),
            "Z8" => Some(GroupExpr::Cyclic(8)),
            "Q8" | "quaternion8" => Some(GroupExpr::Quaternion8),
            "Z4xZ2" | "Z4×Z2" => Some(GroupExpr::Product(
                Box::new(GroupExpr::Cyclic(4)),
                Box::new(GroupExpr::Cyclic(2)),
            )),
            "Z4xZ4" | "Z4×Z4" => Some(GroupExpr::Product(
                Box::new(GroupExpr::Cyclic(4)),
                Box::new(GroupExpr::Cyclic(4)),
            )),
            "Z4xZ4_sd_Z2" | "(Z4×Z4)⋊Z2" | "(Z4xZ4):Z2" => Some(GroupExpr::SemidirectZ2 {
                base: Box::new(GroupExpr::parse("Z4xZ4")?),
                aut: "swap".into(),
            }),
            "Z4_sd_Z" | "Z4⋊Z" => Some(GroupExpr::ZExtension {
                fiber: Box::new(GroupExpr::Cyclic(4)),
                theta: "invert".into(),
            }),
            "Z4xZ2_sd_Z" | "(Z4×Z2)⋊Z" | "(Z4xZ2):Z" => Some(GroupExpr::ZExtension {
                fiber: Box::new(GroupExpr::parse("Z4xZ2")?),
                theta: "invert_left".into(),
            }),
            "Z4xZ4_sd_Z" | "(Z4×Z4)⋊Z" | "(Z4xZ4):Z" => Some(GroupExpr::ZExtension {
                fiber: Box::new(GroupExpr::parse("Z4xZ4")?),
                theta: "invert".into(),
            }),
            "Z4xZ4_sd_Z2_sd_Z" | "((Z4×Z4)⋊Z2)⋊Z" | "((Z4xZ4):Z2):Z" => Some(GroupExpr::ZExtension {
                fiber: Box::new(GroupExpr::parse("Z4xZ4_sd_Z2")?),
                theta: "invert_base".into(),
            }),
            _ => None,
        };
        if let Some(p) = preset {
            return Ok(p);
        }
        if t.starts_with('{') {
            return serde_json::from_str(t).map_err(|e| Error::Parse(format!("bad group spec: {e}")));
        }
        if let Some(n) = t.strip_prefix('Z').and_then(|r| r.parse::<usize>().ok()) {
            return Ok(GroupExpr::Cyclic(n));
        }
        Err(Error::Parse(format!("unrecognized group spec {t:?}")))
    }

    pub fn canonical_name(&self) -> String {
        match self {
            GroupExpr::Cyclic(n) => format!("C{n}"),
            GroupExpr::Product(a, b) => format!("prod({},{})", a.canonical_name(), b.canonical_name()),
            GroupExpr::SemidirectZ2 { base, aut } => format!("sdz2({},{aut})", base.canonical_name()),
            GroupExpr::Quaternion8 => "Q8".into(),
            GroupExpr::ZExtension { fiber, theta } => {
                format!("zext({},{theta})", fiber.canonical_name())
            }
        }
    }
}

/// A built group expression: either a finite group or a Z-extension.
#[derive(Clone, Debug)]
pub enum BuiltGroup {
    Finite(FiniteGroup),
    Extension(crate::extension::ZExtension),
}

pub fn build_group(expr: &GroupExpr) -> Result<BuiltGroup> {
    match expr {
        GroupExpr::Cyclic(n) => Ok(BuiltGroup::Finite(cyclic(*n)?)),
        GroupExpr::Quaternion8 => Ok(BuiltGroup::Finite(quaternion8())),
        GroupExpr::Product(a, b) => {
            let (BuiltGroup::Finite(ga), BuiltGroup::Finite(gb)) = (build_group(a)?, build_group(b)?)
            else {
                return Err(Error::Parse("products of Z-extensions are not supported".into()));
            };
            Ok(BuiltGroup::Finite(product(&ga, &gb)?))
        }
        GroupExpr::SemidirectZ2 { base, aut } => {
            let BuiltGroup::Finite(gb) = build_group(base)? else {
                return Err(Error::Parse("semidirect base must be finite".into()));
            };
            let images = named_automorphism(&gb, aut)?;
            Ok(BuiltGroup::Finite(semidirect_z2(&gb, &images, aut)?))
        }
        GroupExpr::ZExtension { fiber, theta } => {
            let BuiltGroup::Finite(gf) = build_group(fiber)? else {
                return Err(Error::Parse("iterated Z-extensions are not supported".into()));
            };
            let images = named_automorphism(&gf, theta)?;
            let aut = crate::hom::GroupAut::from_images(&gf, &images)?;
            Ok(BuiltGroup::Extension(crate::extension::ZExtension::new(gf, aut, theta.clone())?))
        }
    }
}
