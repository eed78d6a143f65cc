//! Ground-term budgets: exhaustive enumeration by size and exact-size random
//! sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::term::{Signature, Symbol, Term};

/// Every ground term over `sig` with at most `max_size` nodes, ordered by
/// size and then by symbol order, left child before right.
pub fn enumerate_ground_terms(sig: &Signature, max_size: usize) -> impl Iterator<Item = Term> {
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    for n in 1..=max_size {
        let mut level = Vec::new();
        for &sym in sig.symbols() {
            match sym.arity() {
                0 if n == 1 => level.push(Term::from_parts(sym, vec![]).expect("constant")),
                1 if n >= 2 => {
                    for c in &by_size[n - 1] {
                        level.push(Term::from_parts(sym, vec![c.clone()]).expect("unary"));
                    }
                }
                2 if n >= 3 => {
                    for left in 1..=n - 2 {
                        for l in &by_size[left] {
                            for r in &by_size[n - 1 - left] {
                                level.push(
                                    Term::from_parts(sym, vec![l.clone(), r.clone()]).expect("binary"),
                                );
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten()
}

/// Uniform sampler over the terms of one exact size, optionally bounding the
/// number of nested products on any path.
#[derive(Clone, Copy, Debug)]
pub struct TermGenerator {
    sig: Signature,
    max_product_depth: Option<usize>,
}

impl TermGenerator {
    pub fn new(sig: Signature) -> TermGenerator {
        TermGenerator {
            sig,
            max_product_depth: None,
        }
    }

    pub fn with_max_product_depth(self, depth: usize) -> TermGenerator {
        TermGenerator {
            max_product_depth: Some(depth),
            ..self
        }
    }

    /// Number of terms of exactly `size` nodes within the product bound.
    /// `None` when the count does not fit in 128 bits.
    pub fn count(&self, size: usize) -> Option<u128> {
        let d = self.depth_for(size);
        Some(self.table(size)?[size][d])
    }

    fn depth_for(&self, size: usize) -> usize {
        self.max_product_depth.unwrap_or(size).min(size)
    }

    // table[n][d] counts terms of size n with product depth at most d.
    fn table(&self, size: usize) -> Option<Vec<Vec<u128>>> {
        let depth = self.depth_for(size);
        let mut table = vec![vec![0u128; depth + 1]; size + 1];
        for n in 1..=size {
            for d in 0..=depth {
                let mut total: u128 = 0;
                for &sym in self.sig.symbols() {
                    total = total.checked_add(self.count_with_root(&table, sym, n, d)?)?;
                }
                table[n][d] = total;
            }
        }
        Some(table)
    }

    fn count_with_root(&self, table: &[Vec<u128>], sym: Symbol, n: usize, d: usize) -> Option<u128> {
        Some(match sym.arity() {
            0 => u128::from(n == 1),
            1 if n >= 2 => table[n - 1][d],
            2 if n >= 3 => {
                let Some(cd) = child_depth(sym, d) else { return Some(0) };
                let mut total: u128 = 0;
                for left in 1..=n - 2 {
                    let pairs = table[left][cd].checked_mul(table[n - 1 - left][cd])?;
                    total = total.checked_add(pairs)?;
                }
                total
            }
            _ => 0,
        })
    }

    /// A uniformly chosen term with exactly `size` nodes.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, size: usize) -> Result<Term> {
        let unreachable = || Error::UnreachableSize {
            size,
            signature: self.sig.id().to_string(),
            product_limited: self.max_product_depth.is_some(),
        };
        let table = self.table(size).ok_or_else(unreachable)?;
        let d = self.depth_for(size);
        if size == 0 || table[size][d] == 0 {
            return Err(unreachable());
        }
        Ok(self.pick(&table, rng, size, d))
    }

    fn pick<R: Rng + ?Sized>(&self, table: &[Vec<u128>], rng: &mut R, n: usize, d: usize) -> Term {
        let mut k = rng.random_range(0..table[n][d]);
        for &sym in self.sig.symbols() {
            let c = self
                .count_with_root(table, sym, n, d)
                .expect("fits: the total did");
            if k >= c {
                k -= c;
                continue;
            }
            let children = match sym.arity() {
                0 => vec![],
                1 => vec![self.pick(table, rng, n - 1, d)],
                _ => {
                    let cd = child_depth(sym, d).expect("counted");
                    let mut left = 1;
                    loop {
                        let c = table[left][cd] * table[n - 1 - left][cd];
                        if k < c {
                            break;
                        }
                        k -= c;
                        left += 1;
                    }
                    vec![
                        self.pick(table, rng, left, cd),
                        self.pick(table, rng, n - 1 - left, cd),
                    ]
                }
            };
            return Term::from_parts(sym, children).expect("arity respected");
        }
        unreachable!("k is below the total count")
    }
}

fn child_depth(sym: Symbol, d: usize) -> Option<usize> {
    if sym == Symbol::Times {
        d.checked_sub(1)
    } else {
        Some(d)
    }
}

/// One random term of exactly `size` nodes; the same seed gives the same term.
pub fn random_ground_term(
    sig: &Signature,
    size: usize,
    seed: u64,
    max_product_depth: Option<usize>,
) -> Result<Term> {
    let mut generator = TermGenerator::new(*sig);
    if let Some(d) = max_product_depth {
        generator = generator.with_max_product_depth(d);
    }
    generator.sample(&mut ChaCha8Rng::seed_from_u64(seed), size)
}

/// `count` random terms with sizes drawn uniformly from `sizes`.
pub fn random_budget(
    sig: &Signature,
    sizes: std::ops::RangeInclusive<usize>,
    count: usize,
    max_product_depth: Option<usize>,
    seed: u64,
) -> Result<Vec<Term>> {
    let mut generator = TermGenerator::new(*sig);
    if let Some(d) = max_product_depth {
        generator = generator.with_max_product_depth(d);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.random_range(sizes.clone());
            generator.sample(&mut rng, size)
        })
        .collect()
}
