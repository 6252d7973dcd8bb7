//! Noncommutative Buchberger completion for admissible path relations.
//!
//! Words are arrow sequences in application order, compared by length and
//! then lexicographically. Reductions never increase length, so completing
//! all overlaps up to length `cap` makes normal forms of every word of length
//! at most `cap` unique.

use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use crate::exactla::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type WordPoly = BTreeMap<Word, Scalar>;

/// `lead ≡ Σ tail`.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Vec<usize>,
    pub tail: Vec<(Vec<usize>, Scalar)>,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: FieldSpec,
    pub rules: Vec<Rule>,
}

fn find_sub(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn add_term(p: &mut WordPoly, field: FieldSpec, w: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let key = Word(w);
    let v = match p.get(&key) {
        Some(old) => field.add(old, &c),
        None => c,
    };
    if v.is_zero() {
        p.remove(&key);
    } else {
        p.insert(key, v);
    }
}

impl RewriteSystem {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    fn find_rule(&self, w: &[usize]) -> Option<(usize, usize)> {
        self.rules
            .iter()
            .enumerate()
            .find_map(|(ri, r)| find_sub(w, &r.lead).map(|pos| (ri, pos)))
    }

    pub fn is_reducible(&self, w: &[usize]) -> bool {
        self.find_rule(w).is_some()
    }

    /// True when some rule's leading word is a suffix of `w`.
    pub fn has_reducible_suffix(&self, w: &[usize]) -> bool {
        self.rules.iter().any(|r| w.ends_with(&r.lead))
    }

    pub fn reduce(&self, mut p: WordPoly) -> WordPoly {
        let f = self.field;
        let mut done = WordPoly::new();
        while let Some((Word(w), c)) = p.pop_last() {
            match self.find_rule(&w) {
                None => {
                    done.insert(Word(w), c);
                }
                Some((ri, pos)) => {
                    let rule = &self.rules[ri];
                    let (pre, post) = (&w[..pos], &w[pos + rule.lead.len()..]);
                    for (t, tc) in &rule.tail {
                        let mut nw = pre.to_vec();
                        nw.extend_from_slice(t);
                        nw.extend_from_slice(post);
                        add_term(&mut p, f, nw, f.mul(&c, tc));
                    }
                }
            }
        }
        done
    }

    pub fn normal_form(&self, w: &[usize]) -> WordPoly {
        let mut p = WordPoly::new();
        p.insert(Word(w.to_vec()), Scalar::one());
        self.reduce(p)
    }

    fn rule_poly(r: &Rule, f: FieldSpec) -> WordPoly {
        let mut p = WordPoly::new();
        add_term(&mut p, f, r.lead.clone(), Scalar::one());
        for (t, c) in &r.tail {
            add_term(&mut p, f, t.clone(), f.neg(c));
        }
        p
    }

    fn make_rule(p: WordPoly, f: FieldSpec) -> Rule {
        let (Word(lead), lc) = p.iter().next_back().map(|(w, c)| (w.clone(), c.clone())).unwrap();
        let inv = f.inv(&lc).expect("leading coefficient is nonzero");
        let tail = p
            .into_iter()
            .filter(|(w, _)| w.0 != lead)
            .map(|(w, c)| (w.0, f.neg(&f.mul(&c, &inv))))
            .collect();
        Rule { lead, tail }
    }

    /// S-polynomials for overlaps `a = x·u`, `b = u·y` (application order),
    /// with the combined word no longer than `cap`.
    fn overlaps(&self, a: &Rule, b: &Rule, cap: usize, out: &mut VecDeque<WordPoly>) {
        let f = self.field;
        let (la, lb) = (&a.lead, &b.lead);
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] != lb[..k] {
                continue;
            }
            let total = la.len() + lb.len() - k;
            if total > cap {
                continue;
            }
            let x = &la[..la.len() - k];
            let y = &lb[k..];
            let mut s = WordPoly::new();
            // a·y − x·b, with the leading words cancelling
            for (w, c) in Self::rule_poly(a, f) {
                let mut nw = w.0;
                nw.extend_from_slice(y);
                add_term(&mut s, f, nw, c);
            }
            for (w, c) in Self::rule_poly(b, f) {
                let mut nw = x.to_vec();
                nw.extend_from_slice(&w.0);
                add_term(&mut s, f, nw, f.neg(&c));
            }
            out.push_back(s);
        }
    }

    /// Completes `generators` with overlap words of length at most `cap`.
    pub fn complete(field: FieldSpec, generators: Vec<WordPoly>, cap: usize) -> RewriteSystem {
        let mut sys = RewriteSystem { field, rules: Vec::new() };
        let mut queue: VecDeque<WordPoly> = generators.into();
        while let Some(p) = queue.pop_front() {
            let p = sys.reduce(p);
            if p.is_empty() {
                continue;
            }
            let rule = Self::make_rule(p, field);
            // rules whose leading word contains the new one are re-queued
            let mut kept = Vec::new();
            for r in std::mem::take(&mut sys.rules) {
                if find_sub(&r.lead, &rule.lead).is_some() {
                    queue.push_back(Self::rule_poly(&r, field));
                } else {
                    kept.push(r);
                }
            }
            sys.rules = kept;
            let mut pending = VecDeque::new();
            for r in &sys.rules {
                sys.overlaps(&rule, r, cap, &mut pending);
                sys.overlaps(r, &rule, cap, &mut pending);
            }
            sys.overlaps(&rule, &rule, cap, &mut pending);
            sys.rules.push(rule);
            queue.extend(pending);
        }
        // fully reduce tails
        for i in 0..sys.rules.len() {
            let r = sys.rules[i].clone();
            let mut tail = WordPoly::new();
            for (t, c) in r.tail {
                add_term(&mut tail, field, t, c);
            }
            let tail = sys.reduce(tail);
            sys.rules[i].tail = tail.into_iter().map(|(w, c)| (w.0, c)).collect();
        }
        sys.rules.sort_by_key(|a| Word(a.lead.clone()));
        sys
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutativity_relation_completes() {
        // arrows 0,1 loops at one vertex; relation 0·1 = 1·0 written as words
        let q = FieldSpec::Rationals;
        let mut g = WordPoly::new();
        g.insert(Word(vec![1, 0]), q.one());
        g.insert(Word(vec![0, 1]), q.from_i64(-1));
        let sys = RewriteSystem::complete(q, vec![g], 10);
        assert_eq!(sys.rules.len(), 1);
        let nf = sys.normal_form(&[1, 1, 0]);
        assert_eq!(nf.len(), 1);
        assert_eq!(nf.keys().next().unwrap().0, vec![0, 1, 1]);
    }

    #[test]
    fn overlap_produces_new_rule() {
        // x y = x, y y = ... with words over a single vertex: rules [0,1] -> [0], [1,1] -> 0
        let q = FieldSpec::Rationals;
        let mut g1 = WordPoly::new();
        g1.insert(Word(vec![0, 1]), q.one());
        g1.insert(Word(vec![0]), q.from_i64(-1));
        let mut g2 = WordPoly::new();
        g2.insert(Word(vec![1, 1]), q.one());
        let sys = RewriteSystem::complete(q, vec![g1, g2], 10);
        // overlap 0 1 1: (0 1) 1 -> 0 1 -> 0 ; 0 (1 1) -> 0, so x = 0
        assert!(sys.is_reducible(&[0]));
    }
}
