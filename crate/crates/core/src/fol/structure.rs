use std::collections::BTreeMap;
use std::fmt;

use super::{FolError, Signature, SymbolKind};

/// A structure with universe `{0, .., size-1}`. Relations and functions are
/// stored as flat tables indexed by the argument tuple read as a base-`size`
/// numeral, first argument most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteStructure {
    size: usize,
    signature: Signature,
    relations: BTreeMap<String, (usize, Vec<bool>)>,
    functions: BTreeMap<String, (usize, Vec<usize>)>,
    constants: BTreeMap<String, usize>,
    names: Vec<String>,
}

fn tuple_index(size: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, a| acc * size + a)
}

fn tuple_at(size: usize, arity: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % size;
        index /= size;
    }
    out
}

fn table_len(size: usize, arity: usize) -> Result<usize, FolError> {
    size.checked_pow(arity as u32)
        .filter(|n| *n <= 1 << 24)
        .ok_or(FolError::TooLarge {
            size,
            limit: 1 << 24,
        })
}

impl FiniteStructure {
    /// All relations empty, every function and constant sent to 0.
    pub fn new(size: usize, signature: &Signature) -> Result<Self, FolError> {
        if size == 0 {
            return Err(FolError::EmptyUniverse);
        }
        let mut m = FiniteStructure {
            size,
            signature: signature.clone(),
            relations: BTreeMap::new(),
            functions: BTreeMap::new(),
            constants: BTreeMap::new(),
            names: Vec::new(),
        };
        for (name, kind, arity) in signature.iter() {
            match kind {
                SymbolKind::Relation => {
                    m.relations.insert(
                        name.to_string(),
                        (arity, vec![false; table_len(size, arity)?]),
                    );
                }
                SymbolKind::Function => {
                    m.functions
                        .insert(name.to_string(), (arity, vec![0; table_len(size, arity)?]));
                }
                SymbolKind::Constant => {
                    m.constants.insert(name.to_string(), 0);
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Element names from the structure file, if it declared any.
    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    fn check_element(&self, name: &str, value: usize) -> Result<(), FolError> {
        if value < self.size {
            Ok(())
        } else {
            Err(FolError::OutOfUniverse {
                name: name.to_string(),
                value,
                size: self.size,
            })
        }
    }

    fn lookup(&self, name: &str, kind: SymbolKind, arity: usize) -> Result<(), FolError> {
        match self.signature.get(name) {
            None => Err(FolError::UnknownSymbol(name.to_string())),
            Some((k, _)) if k != kind => Err(FolError::WrongKind {
                name: name.to_string(),
                expected: kind,
                found: k,
            }),
            Some((_, a)) if a != arity => Err(FolError::ArityMismatch {
                name: name.to_string(),
                expected: a,
                found: arity,
            }),
            Some(_) => Ok(()),
        }
    }

    pub fn set_holds(&mut self, rel: &str, args: &[usize], value: bool) -> Result<(), FolError> {
        self.lookup(rel, SymbolKind::Relation, args.len())?;
        for a in args {
            self.check_element(rel, *a)?;
        }
        let idx = tuple_index(self.size, args);
        self.relations.get_mut(rel).expect("declared").1[idx] = value;
        Ok(())
    }

    pub fn set_function(
        &mut self,
        fun: &str,
        args: &[usize],
        value: usize,
    ) -> Result<(), FolError> {
        self.lookup(fun, SymbolKind::Function, args.len())?;
        for a in args.iter().chain([&value]) {
            self.check_element(fun, *a)?;
        }
        let idx = tuple_index(self.size, args);
        self.functions.get_mut(fun).expect("declared").1[idx] = value;
        Ok(())
    }

    /// Fills a whole function table from a closure.
    pub fn define_function(
        &mut self,
        fun: &str,
        mut f: impl FnMut(&[usize]) -> usize,
    ) -> Result<(), FolError> {
        let arity = match self.signature.get(fun) {
            Some((SymbolKind::Function, a)) => a,
            _ => return Err(FolError::UnknownSymbol(fun.to_string())),
        };
        for i in 0..table_len(self.size, arity)? {
            let args = tuple_at(self.size, arity, i);
            self.set_function(fun, &args, f(&args))?;
        }
        Ok(())
    }

    /// Fills a whole relation table from a predicate.
    pub fn define_relation(
        &mut self,
        rel: &str,
        mut p: impl FnMut(&[usize]) -> bool,
    ) -> Result<(), FolError> {
        let arity = match self.signature.get(rel) {
            Some((SymbolKind::Relation, a)) => a,
            _ => return Err(FolError::UnknownSymbol(rel.to_string())),
        };
        for i in 0..table_len(self.size, arity)? {
            let args = tuple_at(self.size, arity, i);
            self.set_holds(rel, &args, p(&args))?;
        }
        Ok(())
    }

    pub fn set_constant(&mut self, name: &str, value: usize) -> Result<(), FolError> {
        self.lookup(name, SymbolKind::Constant, 0)?;
        self.check_element(name, value)?;
        self.constants.insert(name.to_string(), value);
        Ok(())
    }

    /// Panics if `rel` is not a relation of the signature.
    pub fn holds(&self, rel: &str, args: &[usize]) -> bool {
        self.relations[rel].1[tuple_index(self.size, args)]
    }

    /// Panics if `fun` is not a function of the signature.
    pub fn apply(&self, fun: &str, args: &[usize]) -> usize {
        self.functions[fun].1[tuple_index(self.size, args)]
    }

    /// Panics if `name` is not a constant of the signature.
    pub fn constant(&self, name: &str) -> usize {
        self.constants[name]
    }

    pub fn tuples(&self, rel: &str) -> Vec<Vec<usize>> {
        let (arity, table) = &self.relations[rel];
        table
            .iter()
            .enumerate()
            .filter(|(_, v)| **v)
            .map(|(i, _)| tuple_at(self.size, *arity, i))
            .collect()
    }

    pub(crate) fn relation_table(&self, rel: &str) -> Option<&(usize, Vec<bool>)> {
        self.relations.get(rel)
    }

    pub(crate) fn function_table(&self, fun: &str) -> Option<&(usize, Vec<usize>)> {
        self.functions.get(fun)
    }

    pub(crate) fn constants(&self) -> &BTreeMap<String, usize> {
        &self.constants
    }

    /// The structure obtained by renaming element `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteStructure {
        let mut out = FiniteStructure::new(self.size, &self.signature).expect("same shape");
        for (name, (arity, table)) in &self.relations {
            for (i, v) in table.iter().enumerate() {
                if *v {
                    let args: Vec<usize> = tuple_at(self.size, *arity, i)
                        .iter()
                        .map(|a| perm[*a])
                        .collect();
                    out.set_holds(name, &args, true).expect("in range");
                }
            }
        }
        for (name, (arity, table)) in &self.functions {
            for (i, v) in table.iter().enumerate() {
                let args: Vec<usize> = tuple_at(self.size, *arity, i)
                    .iter()
                    .map(|a| perm[*a])
                    .collect();
                out.set_function(name, &args, perm[*v]).expect("in range");
            }
        }
        for (name, v) in &self.constants {
            out.set_constant(name, perm[*v]).expect("in range");
        }
        out
    }
}

/// Restriction of `m` to the symbols of `sub`.
pub fn reduct(m: &FiniteStructure, sub: &Signature) -> Result<FiniteStructure, FolError> {
    sub.is_subsignature_of(&m.signature)?;
    let keep = |name: &String| sub.contains(name);
    Ok(FiniteStructure {
        size: m.size,
        signature: sub.clone(),
        relations: m
            .relations
            .iter()
            .filter(|(n, _)| keep(n))
            .map(|(n, v)| (n.clone(), v.clone()))
            .collect(),
        functions: m
            .functions
            .iter()
            .filter(|(n, _)| keep(n))
            .map(|(n, v)| (n.clone(), v.clone()))
            .collect(),
        constants: m
            .constants
            .iter()
            .filter(|(n, _)| keep(n))
            .map(|(n, v)| (n.clone(), *v))
            .collect(),
        names: m.names.clone(),
    })
}

/// Every structure of the given size over `sig`, in a fixed order. The count
/// is the product of the table sizes, so callers keep `sig` and `size` small.
pub fn enumerate_structures(
    sig: &Signature,
    size: usize,
) -> Result<impl Iterator<Item = FiniteStructure>, FolError> {
    let base = FiniteStructure::new(size, sig)?;
    // one digit per table cell: (radix, symbol, cell)
    let mut digits: Vec<(usize, String, usize, SymbolKind)> = Vec::new();
    for (name, kind, arity) in sig.iter() {
        let cells = table_len(size, arity)?;
        let radix = if kind == SymbolKind::Relation {
            2
        } else {
            size
        };
        for cell in 0..cells {
            digits.push((radix, name.to_string(), cell, kind));
        }
    }
    let mut counter: Option<Vec<usize>> = Some(vec![0; digits.len()]);
    Ok(std::iter::from_fn(move || {
        let current = counter.as_mut()?;
        let mut m = base.clone();
        for ((_, name, cell, kind), d) in digits.iter().zip(current.iter()) {
            match kind {
                SymbolKind::Relation => {
                    m.relations.get_mut(name).expect("declared").1[*cell] = *d == 1
                }
                SymbolKind::Function => m.functions.get_mut(name).expect("declared").1[*cell] = *d,
                SymbolKind::Constant => {
                    m.constants.insert(name.clone(), *d);
                }
            }
        }
        let mut i = current.len();
        loop {
            if i == 0 {
                counter = None;
                break;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < digits[i].0 {
                break;
            }
            current[i] = 0;
        }
        Some(m)
    }))
}

impl fmt::Display for FiniteStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size {}", self.size)?;
        if !self.names.is_empty() {
            writeln!(f, "names {}", self.names.join(" "))?;
        }
        let join = |xs: &[usize]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        for (name, (arity, _)) in &self.relations {
            writeln!(f, "rel {name} arity {arity}")?;
            for t in self.tuples(name) {
                if t.is_empty() {
                    writeln!(f, "()")?;
                } else {
                    writeln!(f, "{}", join(&t))?;
                }
            }
        }
        for (name, (arity, table)) in &self.functions {
            writeln!(f, "fun {name} arity {arity}")?;
            for (i, v) in table.iter().enumerate() {
                let args = tuple_at(self.size, *arity, i);
                if args.is_empty() {
                    writeln!(f, "-> {v}")?;
                } else {
                    writeln!(f, "{} -> {v}", join(&args))?;
                }
            }
        }
        for (name, v) in &self.constants {
            writeln!(f, "const {name} = {v}")?;
        }
        Ok(())
    }
}

enum Section {
    None,
    Rel(String, usize),
    Fun(String, usize),
}

impl std::str::FromStr for FiniteStructure {
    type Err = FolError;

    /// Reads the line-oriented structure format; the signature is taken from
    /// the declarations. `#` starts a comment.
    fn from_str(src: &str) -> Result<Self, FolError> {
        let err = |line: usize, message: String| FolError::StructureFile { line, message };
        let lines: Vec<(usize, &str)> = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let Some(&(first_no, first)) = lines.first() else {
            return Err(err(1, "missing `size` header".into()));
        };
        let size: usize = match first.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["size", n] => n
                .parse()
                .map_err(|_| err(first_no, format!("bad size `{n}`")))?,
            _ => return Err(err(first_no, "expected `size n`".into())),
        };
        if size == 0 {
            return Err(FolError::EmptyUniverse);
        }

        // First pass: declarations, to learn the signature.
        let mut sig = Signature::new();
        let mut names: Vec<String> = Vec::new();
        for &(no, line) in &lines[1..] {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["names", rest @ ..] => {
                    if rest.len() != size {
                        return Err(err(
                            no,
                            format!("expected {size} names, got {}", rest.len()),
                        ));
                    }
                    names = rest.iter().map(|s| s.to_string()).collect();
                }
                ["rel" | "fun", name, "arity", k] => {
                    let arity: usize =
                        k.parse().map_err(|_| err(no, format!("bad arity `{k}`")))?;
                    if sig.contains(name) {
                        return Err(err(no, format!("`{name}` declared twice")));
                    }
                    let kind = if words[0] == "rel" {
                        SymbolKind::Relation
                    } else {
                        SymbolKind::Function
                    };
                    sig.insert(name, kind, arity);
                }
                ["const", name, "=", _] => {
                    if sig.contains(name) {
                        return Err(err(no, format!("`{name}` declared twice")));
                    }
                    sig.insert(name, SymbolKind::Constant, 0);
                }
                _ => {}
            }
        }
        let mut m = FiniteStructure::new(size, &sig)?;
        m.names = names.clone();
        let element = |no: usize, word: &str| -> Result<usize, FolError> {
            let v = match word.parse::<usize>() {
                Ok(v) => v,
                Err(_) => names
                    .iter()
                    .position(|n| n == word)
                    .ok_or_else(|| err(no, format!("unknown element `{word}`")))?,
            };
            if v >= size {
                return Err(err(
                    no,
                    format!("element {v} outside universe of size {size}"),
                ));
            }
            Ok(v)
        };

        let mut section = Section::None;
        let mut seen: BTreeMap<String, Vec<bool>> = BTreeMap::new();
        for &(no, line) in &lines[1..] {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["names", ..] => section = Section::None,
                ["rel", name, "arity", _] => {
                    section = Section::Rel(name.to_string(), sig.get(name).unwrap().1)
                }
                ["fun", name, "arity", _] => {
                    let arity = sig.get(name).unwrap().1;
                    seen.insert(name.to_string(), vec![false; table_len(size, arity)?]);
                    section = Section::Fun(name.to_string(), arity);
                }
                ["const", name, "=", v] => {
                    let v = element(no, v)?;
                    m.set_constant(name, v)?;
                    section = Section::None;
                }
                _ => match &section {
                    Section::None => return Err(err(no, format!("unexpected line `{line}`"))),
                    Section::Rel(name, arity) => {
                        let args: Vec<usize> = if line == "()" {
                            Vec::new()
                        } else {
                            words
                                .iter()
                                .map(|w| element(no, w))
                                .collect::<Result<_, _>>()?
                        };
                        if args.len() != *arity {
                            return Err(err(no, format!("`{name}` has arity {arity}")));
                        }
                        m.set_holds(name, &args, true)?;
                    }
                    Section::Fun(name, arity) => {
                        let (lhs, rhs) = line
                            .split_once("->")
                            .ok_or_else(|| err(no, "expected `args -> value`".into()))?;
                        let args: Vec<usize> = lhs
                            .split_whitespace()
                            .map(|w| element(no, w))
                            .collect::<Result<_, _>>()?;
                        if args.len() != *arity {
                            return Err(err(no, format!("`{name}` has arity {arity}")));
                        }
                        let value = element(no, rhs.trim())?;
                        let cell = &mut seen.get_mut(name).unwrap()[tuple_index(size, &args)];
                        if *cell {
                            return Err(err(
                                no,
                                format!("`{name}` defined twice at these arguments"),
                            ));
                        }
                        *cell = true;
                        m.set_function(name, &args, value)?;
                    }
                },
            }
        }
        for (name, cells) in &seen {
            if let Some(i) = cells.iter().position(|c| !c) {
                let arity = sig.get(name).unwrap().1;
                return Err(err(
                    0,
                    format!(
                        "`{name}` is not total: no value at {:?}",
                        tuple_at(size, arity, i)
                    ),
                ));
            }
        }
        Ok(m)
    }
}
