use super::{FiniteStructure, FolError};

/// Largest universe accepted by [`find_isomorphism`].
pub const MAX_ISO_SIZE: usize = 8;

struct Search<'a> {
    m1: &'a FiniteStructure,
    m2: &'a FiniteStructure,
    n: usize,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    // Checks every relation and function condition whose arguments are all
    // mapped and which involves `k`.
    fn consistent(&self, k: usize) -> bool {
        let n = self.n;
        for (name, _, _) in self.m1.signature().iter() {
            if let Some((arity, table)) = self.m1.relation_table(name) {
                let other = &self.m2.relation_table(name).expect("same signature").1;
                let ok = self.each_mapped_tuple(*arity, |args, img| {
                    !args.contains(&k) || table[index(n, args)] == other[index(n, img)]
                });
                if !ok {
                    return false;
                }
            }
            if let Some((arity, table)) = self.m1.function_table(name) {
                let other = &self.m2.function_table(name).expect("same signature").1;
                let ok = self.each_mapped_tuple(*arity, |args, img| {
                    let value = table[index(n, args)];
                    match self.map[value] {
                        Some(v) if args.contains(&k) || value == k => v == other[index(n, img)],
                        _ => true,
                    }
                });
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    // Visits every tuple of mapped elements together with its image.
    fn each_mapped_tuple(
        &self,
        arity: usize,
        mut f: impl FnMut(&[usize], &[usize]) -> bool,
    ) -> bool {
        let mapped: Vec<usize> = (0..self.n).filter(|x| self.map[*x].is_some()).collect();
        let mut digits = vec![0usize; arity];
        let mut args = vec![0usize; arity];
        let mut img = vec![0usize; arity];
        loop {
            for i in 0..arity {
                args[i] = mapped[digits[i]];
                img[i] = self.map[args[i]].expect("mapped");
            }
            if !f(&args, &img) {
                return false;
            }
            let mut i = arity;
            loop {
                if i == 0 {
                    return true;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < mapped.len() {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.n {
            return true;
        }
        if self.map[k].is_some() {
            // pinned by a constant
            return self.consistent(k) && self.run(k + 1);
        }
        for target in 0..self.n {
            if self.used[target] {
                continue;
            }
            self.map[k] = Some(target);
            self.used[target] = true;
            if self.consistent(k) && self.run(k + 1) {
                return true;
            }
            self.map[k] = None;
            self.used[target] = false;
        }
        false
    }
}

fn index(n: usize, args: &[usize]) -> usize {
    args.iter().fold(0, |acc, a| acc * n + a)
}

/// Searches for a bijection `j` with `j[a]` the image of element `a` that
/// preserves every relation, function and constant. Images are tried in
/// increasing order, so the first isomorphism in lexicographic order is
/// returned.
pub fn find_isomorphism(
    m1: &FiniteStructure,
    m2: &FiniteStructure,
) -> Result<Option<Vec<usize>>, FolError> {
    if m1.signature() != m2.signature() {
        return Err(FolError::SignatureMismatch);
    }
    for m in [m1, m2] {
        if m.size() > MAX_ISO_SIZE {
            return Err(FolError::TooLarge {
                size: m.size(),
                limit: MAX_ISO_SIZE,
            });
        }
    }
    if m1.size() != m2.size() {
        return Ok(None);
    }
    for (name, _, _) in m1.signature().iter() {
        if let Some((0, table)) = m1.relation_table(name) {
            if *table != m2.relation_table(name).expect("same signature").1 {
                return Ok(None);
            }
        }
    }
    let n = m1.size();
    let mut search = Search {
        m1,
        m2,
        n,
        map: vec![None; n],
        used: vec![false; n],
    };
    for (name, a) in m1.constants() {
        let b = m2.constant(name);
        match search.map[*a] {
            Some(prev) if prev != b => return Ok(None),
            Some(_) => {}
            None if search.used[b] => return Ok(None),
            None => {
                search.map[*a] = Some(b);
                search.used[b] = true;
            }
        }
    }
    Ok(if search.run(0) {
        Some(search.map.into_iter().map(|x| x.expect("total")).collect())
    } else {
        None
    })
}
