use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use super::GroupError;

/// A word `g_1^{e_1} * g_2^{e_2} * ...` in named generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<(String, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(name: &str, exp: i64) -> Self {
        Word(vec![(name.to_string(), exp)])
    }

    /// Parses `name^int` factors joined by `*`; `1` or the empty string is
    /// the identity. Negative exponents are accepted.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let t = text.trim();
        if t.is_empty() || t == "1" {
            return Ok(Word::identity());
        }
        let mut out = Vec::new();
        for part in t.split('*') {
            let part = part.trim();
            let (name, exp) = match part.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim().parse::<i64>().map_err(|_| {
                        GroupError::InvalidSpec(format!("bad exponent in word factor {part:?}"))
                    })?;
                    (n.trim(), e)
                }
                None => (part, 1),
            };
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(GroupError::InvalidSpec(format!(
                    "bad generator name in word factor {part:?}"
                )));
            }
            out.push((name.to_string(), exp));
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (n, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                f.write_str(n)?;
            } else {
                write!(f, "{n}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub order: u32,
}

/// `actor^-1 * acted * actor = image`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationRule {
    pub acted: String,
    pub actor: String,
    pub image: Word,
}

/// `generator^order = word` for a non-split power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRule {
    pub generator: String,
    pub word: Word,
}

/// A polycyclic presentation. Generators are listed from the bottom of the
/// series up: the subgroup generated by the first `j` generators must be
/// normalized by generator `j`, and rules may only express an earlier
/// generator in terms of earlier generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupSpec {
    pub generators: Vec<GeneratorDecl>,
    pub conjugations: Vec<ConjugationRule>,
    pub powers: Vec<PowerRule>,
}

impl GroupSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator(mut self, name: &str, order: u32) -> Self {
        self.generators.push(GeneratorDecl {
            name: name.to_string(),
            order,
        });
        self
    }

    /// Adds `actor^-1 * acted * actor = image`.
    pub fn conjugation(mut self, acted: &str, actor: &str, image: &str) -> Result<Self, GroupError> {
        self.conjugations.push(ConjugationRule {
            acted: acted.to_string(),
            actor: actor.to_string(),
            image: Word::parse(image)?,
        });
        Ok(self)
    }

    pub fn power(mut self, generator: &str, word: &str) -> Result<Self, GroupError> {
        self.powers.push(PowerRule {
            generator: generator.to_string(),
            word: Word::parse(word)?,
        });
        Ok(self)
    }

    pub fn cyclic(order: u32) -> Self {
        GroupSpec::new().generator("g", order)
    }

    fn position(&self, name: &str) -> Result<usize, GroupError> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))
    }

    /// Checks names, prime-power orders, and rule well-formedness.
    pub fn validate(&self) -> Result<(), GroupError> {
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].iter().any(|h| h.name == g.name) {
                return Err(GroupError::InvalidSpec(format!("generator {:?} declared twice", g.name)));
            }
            if !is_prime_power(g.order as u64) {
                return Err(GroupError::InvalidSpec(format!(
                    "order {} of generator {:?} is not a prime power",
                    g.order, g.name
                )));
            }
        }
        for r in &self.conjugations {
            let acted = self.position(&r.acted)?;
            let actor = self.position(&r.actor)?;
            if acted >= actor {
                return Err(GroupError::UnsupportedRule(format!(
                    "{} acts on {}, but only later generators may act on earlier ones",
                    r.actor, r.acted
                )));
            }
            for (n, _) in &r.image.0 {
                if self.position(n)? >= actor {
                    return Err(GroupError::UnsupportedRule(format!(
                        "image {} of {}^{} is not a word in generators below {}",
                        r.image, r.acted, r.actor, r.actor
                    )));
                }
            }
            let dup = self
                .conjugations
                .iter()
                .filter(|q| q.acted == r.acted && q.actor == r.actor)
                .count();
            if dup > 1 {
                return Err(GroupError::InvalidSpec(format!(
                    "conjugation of {} by {} given twice",
                    r.acted, r.actor
                )));
            }
        }
        for r in &self.powers {
            let g = self.position(&r.generator)?;
            for (n, _) in &r.word.0 {
                if self.position(n)? >= g {
                    return Err(GroupError::UnsupportedRule(format!(
                        "power {}^{} = {} is not a word in earlier generators",
                        r.generator, self.generators[g].order, r.word
                    )));
                }
            }
            if self.powers.iter().filter(|q| q.generator == r.generator).count() > 1 {
                return Err(GroupError::InvalidSpec(format!("power of {} given twice", r.generator)));
            }
        }
        Ok(())
    }
}

pub fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while n % p != 0 {
        p += 1;
    }
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// The semidirect product `(C_{2^n} x C_{2^n}) ⋊ C_2` with
/// `c^-1 a c = a^i b^j`, `c^-1 b c = a^k b^l`.
pub fn family_spec(n: u32, matrix: [u64; 4]) -> Result<GroupSpec, GroupError> {
    if n == 0 || n > 6 {
        return Err(GroupError::InvalidInput(format!("family parameter n = {n} outside 1..=6")));
    }
    let m = 1u64 << n;
    let [i, j, k, l] = matrix.map(|x| x % m);
    let det = (i * l + m - (j * k) % m) % m;
    if det % 2 == 0 {
        return Err(GroupError::InvalidAction(format!(
            "matrix [[{i},{j}],[{k},{l}]] has even determinant mod {m}"
        )));
    }
    let sq = [
        (i * i + j * k) % m,
        (i * j + j * l) % m,
        (k * i + l * k) % m,
        (k * j + l * l) % m,
    ];
    if sq != [1, 0, 0, 1] {
        return Err(GroupError::InvalidAction(format!(
            "matrix [[{i},{j}],[{k},{l}]] does not square to the identity mod {m}"
        )));
    }
    let ord = m as u32;
    GroupSpec::new()
        .generator("a", ord)
        .generator("b", ord)
        .generator("c", 2)
        .conjugation("a", "c", &format!("a^{i}*b^{j}"))?
        .conjugation("b", "c", &format!("a^{k}*b^{l}"))
}

/// All matrices `[i, j, k, l]` over Z/2^n with `M^2 = I` (such matrices are
/// automatically invertible).
pub fn family_matrices(n: u32) -> Vec<[u64; 4]> {
    let m = 1u64 << n;
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    if (i * i + j * k) % m == 1
                        && (i * j + j * l) % m == 0
                        && (k * i + l * k) % m == 0
                        && (k * j + l * l) % m == 1
                    {
                        out.push([i, j, k, l]);
                    }
                }
            }
        }
    }
    out
}

/// How a group is described in input files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSource {
    Polycyclic(GroupSpec),
    Family { n: u32, matrix: [u64; 4] },
    Cyclic { order: u32 },
    Product(Vec<GroupSource>),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_syntax() {
        let w = Word::parse("a^7 * b^0*c").unwrap();
        assert_eq!(w.0, vec![("a".into(), 7), ("b".into(), 0), ("c".into(), 1)]);
        assert_eq!(w.to_string(), "a^7*b^0*c");
        assert_eq!(Word::parse("1").unwrap(), Word::identity());
        assert_eq!(Word::parse("b^-1").unwrap().0, vec![("b".into(), -1)]);
        assert!(Word::parse("b^x").is_err());
        assert!(Word::parse("3^2").is_err());
    }

    #[test]
    fn validation() {
        assert!(GroupSpec::new().generator("a", 6).validate().is_err());
        let s = GroupSpec::new()
            .generator("a", 4)
            .generator("b", 4)
            .conjugation("b", "a", "b^3")
            .unwrap();
        assert!(matches!(s.validate(), Err(GroupError::UnsupportedRule(_))));
        let s = GroupSpec::new()
            .generator("a", 4)
            .generator("b", 4)
            .conjugation("a", "b", "b^3")
            .unwrap();
        assert!(matches!(s.validate(), Err(GroupError::UnsupportedRule(_))));
        let s = GroupSpec::new().generator("a", 4).conjugation("a", "z", "a").unwrap();
        assert!(matches!(s.validate(), Err(GroupError::UnknownGenerator(_))));
    }

    #[test]
    fn family_validation() {
        assert!(family_spec(2, [1, 0, 0, 1]).is_ok());
        assert!(family_spec(3, [7, 0, 0, 7]).is_ok());
        assert!(matches!(family_spec(2, [2, 0, 0, 1]), Err(GroupError::InvalidAction(_))));
        assert!(matches!(family_spec(2, [1, 1, 0, 1]), Err(GroupError::InvalidAction(_))));
        assert!(matches!(family_spec(0, [1, 0, 0, 1]), Err(GroupError::InvalidInput(_))));
    }

    #[test]
    fn family_matrix_counts() {
        // involutions plus the identity in GL_2(Z/2^n)
        assert_eq!(family_matrices(1).len(), 4);
        assert_eq!(family_matrices(2).len(), 28);
        assert_eq!(family_matrices(3).len(), 176);
    }
}
