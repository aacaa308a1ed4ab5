//! Quivers, paths and presentations by relations.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: &[(String, String, String)]) -> Result<Quiver> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate vertex {v:?}"
                )));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        let mut names = HashSet::new();
        let mut pairs = HashSet::new();
        for (name, s, t) in arrows {
            let src = q.vertex(s)?;
            let tgt = q.vertex(t)?;
            if !names.insert(name.clone()) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate arrow {name:?}"
                )));
            }
            if !pairs.insert((src, tgt)) {
                return Err(Error::InvalidPresentation(format!(
                    "multiple arrows {s} → {t}"
                )));
            }
            q.arrows.push(Arrow {
                name: name.clone(),
                src,
                tgt,
            });
        }
        Ok(q)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    /// The dashed partner of each arrow: `x ↔ x'` with reversed ends.
    /// `None` if some arrow has no partner.
    pub fn partners(&self) -> Option<Vec<usize>> {
        self.arrows
            .iter()
            .map(|a| {
                let want = match a
                    .name
                    .strip_suffix('\'')
                    .or_else(|| a.name.strip_suffix('′'))
                {
                    Some(base) => base.to_string(),
                    None => format!("{}'", a.name),
                };
                let alt = format!("{}′", a.name);
                self.arrows.iter().position(|b| {
                    (b.name == want || b.name == alt) && b.src == a.tgt && b.tgt == a.src
                })
            })
            .collect()
    }

    /// All paths of length at most `n`.
    pub fn paths_up_to(&self, n: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.num_vertices()).map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.out_arrows(p.tgt) {
                    next.push(p.then(self, a));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn path(&self, src: usize, arrows: &[usize]) -> Result<Path> {
        let mut p = Path::trivial(src);
        for &a in arrows {
            if self.arrows[a].src != p.tgt {
                return Err(Error::InvalidPresentation(format!(
                    "arrow {} does not continue the path",
                    self.arrows[a].name
                )));
            }
            p = p.then(self, a);
        }
        Ok(p)
    }

    /// Parses a path from arrow names; an empty list is not a valid path.
    pub fn path_from_names(&self, names: &[String]) -> Result<Path> {
        let ids = names
            .iter()
            .map(|n| self.arrow(n))
            .collect::<Result<Vec<_>>>()?;
        let Some(&first) = ids.first() else {
            return Err(Error::InvalidPresentation("empty path in relation".into()));
        };
        self.path(self.arrows[first].src, &ids)
    }

    pub fn show(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.src])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect()
        }
    }
}

/// A directed path, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            src: v,
            tgt: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn then(&self, q: &Quiver, a: usize) -> Path {
        debug_assert_eq!(q.arrows[a].src, self.tgt);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            src: self.src,
            tgt: q.arrows[a].tgt,
            arrows,
        }
    }

    pub fn concat(&self, o: &Path) -> Option<Path> {
        (self.tgt == o.src).then(|| {
            let mut arrows = self.arrows.clone();
            arrows.extend(&o.arrows);
            Path {
                src: self.src,
                tgt: o.tgt,
                arrows,
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(q) => write!(f, "F{q}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<FieldSpec> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t.trim_start_matches(['F', 'f']);
        digits
            .parse()
            .map(FieldSpec::Prime)
            .map_err(|_| Error::UnsupportedField(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub path: Vec<String>,
}

/// Quiver plus relations, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<Vec<Term>>,
    #[serde(default)]
    pub field: FieldSpec,
}

/// A checked relation: a combination of parallel paths.
pub type Relation = Vec<(i64, Path)>;

impl Presentation {
    pub fn from_json(s: &str) -> Result<Presentation> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("presentation serialises")
    }

    pub fn quiver(&self) -> Result<Quiver> {
        Quiver::new(self.vertices.clone(), &self.arrows)
    }

    /// Relations as paths, checking that each is parallel.
    pub fn checked_relations(&self, q: &Quiver) -> Result<Vec<Relation>> {
        self.relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let terms = r
                    .iter()
                    .map(|t| Ok((t.coeff, q.path_from_names(&t.path)?)))
                    .collect::<Result<Vec<_>>>()?;
                if let Some((_, p0)) = terms.first() {
                    if terms
                        .iter()
                        .any(|(_, p)| (p.src, p.tgt) != (p0.src, p0.tgt))
                    {
                        return Err(Error::InvalidPresentation(format!(
                            "relation {} mixes paths with different ends",
                            i + 1
                        )));
                    }
                }
                Ok(terms)
            })
            .collect()
    }

    pub fn with_field(mut self, field: FieldSpec) -> Presentation {
        self.field = field;
        self
    }

    pub fn named(name: &str) -> Result<Presentation> {
        match name {
            "A-appendix" => Ok(algebra_a(false)),
            "A-prime" => Ok(algebra_a(true)),
            "B-subalgebra" => Ok(algebra_b()),
            _ => Err(Error::UnknownPresentation(name.to_string())),
        }
    }

    pub const NAMES: [&'static str; 3] = ["A-appendix", "A-prime", "B-subalgebra"];
}

fn rel(terms: &[(i64, &str)]) -> Vec<Term> {
    terms
        .iter()
        .map(|(c, p)| Term {
            coeff: *c,
            path: p.split_whitespace().map(str::to_string).collect(),
        })
        .collect()
}

fn arrows(spec: &[(&str, &str, &str)]) -> Vec<(String, String, String)> {
    spec.iter()
        .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
        .collect()
}

const ARROWS: [(&str, &str, &str); 6] = [
    ("α", "10", "05"),
    ("α'", "05", "10"),
    ("β", "10", "51"),
    ("β'", "51", "10"),
    ("γ", "10", "43"),
    ("γ'", "43", "10"),
];

/// The four-vertex algebra; with `variant`, the fourth relation becomes
/// `β'β = 0`.
fn algebra_a(variant: bool) -> Presentation {
    let fourth = if variant {
        rel(&[(1, "β' β")])
    } else {
        rel(&[(1, "β' β"), (-1, "β' γ γ' β")])
    };
    Presentation {
        vertices: ["10", "05", "51", "43"].map(String::from).to_vec(),
        arrows: arrows(&ARROWS),
        relations: vec![
            rel(&[(1, "α' α")]),
            rel(&[(1, "α' β")]),
            rel(&[(1, "β' α")]),
            fourth,
            rel(&[(1, "γ' γ")]),
            rel(&[(1, "γ' α α'"), (-1, "γ' β β'")]),
            rel(&[(1, "α α' γ"), (-1, "β β' γ")]),
            rel(&[(1, "γ' α α' γ")]),
        ],
        field: FieldSpec::Rationals,
    }
}

fn algebra_b() -> Presentation {
    Presentation {
        vertices: ["10", "05", "51"].map(String::from).to_vec(),
        arrows: arrows(&ARROWS[..4]),
        relations: vec![
            rel(&[(1, "α' α")]),
            rel(&[(1, "α' β")]),
            rel(&[(1, "β' α")]),
            rel(&[(1, "β' β")]),
        ],
        field: FieldSpec::Rationals,
    }
}
