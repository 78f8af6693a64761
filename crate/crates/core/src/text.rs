//! Text form of monomial ideals.
//!
//! ```text
//! ideal  := term (',' term)*
//! term   := factor ('*' factor)*
//! factor := var ('^' posint)?
//! var    := x | y | z        (when N <= 3)
//!         | x1 | x2 | ... xN
//! ```
//!
//! Whitespace is ignored everywhere. Repeated variables inside a term
//! multiply (`x*x` is `x^2`).

use crate::error::{Error, Result};
use crate::monomial::{minimalize, ExponentVector, MonomialIdeal, MAX_EXPONENT};

const LETTERS: [char; 3] = ['x', 'y', 'z'];

/// Parses a comma-separated generator list into its canonical ideal.
pub fn parse_ideal(text: &str, nvars: usize) -> Result<MonomialIdeal> {
    if nvars == 0 {
        return Err(Error::NoVariables);
    }
    let mut p = Parser {
        chars: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        at: 0,
        end: text.len(),
        nvars,
    };
    if p.chars.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut gens = vec![p.term()?];
    while let Some(c) = p.peek() {
        if c != ',' {
            return Err(p.error("expected `,`"));
        }
        p.bump();
        gens.push(p.term()?);
    }
    minimalize(nvars, gens)
}

/// Inverse of [`parse_ideal`] for canonical ideals.
pub fn render(ideal: &MonomialIdeal) -> String {
    ideal
        .generators()
        .iter()
        .map(|g| render_monomial(g))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders one monomial, `1` for the zero vector.
pub fn render_monomial(exps: &[u32]) -> String {
    let nvars = exps.len();
    let factors: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = var_name(i, nvars);
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

pub fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= 3 {
        LETTERS[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn term(&mut self) -> Result<ExponentVector> {
        let mut exps = vec![0u64; self.nvars];
        loop {
            let (var, power) = self.factor()?;
            exps[var] += power;
            if exps[var] > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOverflow(exps[var]));
            }
            if self.peek() == Some('*') {
                self.bump();
            } else {
                break;
            }
        }
        ExponentVector::new(exps.into_iter().map(|e| e as u32).collect())
    }

    fn factor(&mut self) -> Result<(usize, u64)> {
        let start = self.pos();
        let var = match self.peek() {
            Some(c) if LETTERS.contains(&c) => {
                self.bump();
                let letter_index = LETTERS.iter().position(|&l| l == c).unwrap();
                match self.number() {
                    Some(idx) if c == 'x' => {
                        if idx == 0 || idx > self.nvars as u64 {
                            return Err(Error::VariableOutOfRange {
                                name: format!("x{idx}"),
                                nvars: self.nvars,
                            });
                        }
                        idx as usize - 1
                    }
                    Some(_) => {
                        return Err(Error::Syntax {
                            pos: start,
                            msg: format!("only `x` takes an index, found `{c}` followed by digits"),
                        })
                    }
                    None => {
                        if self.nvars > 3 || letter_index >= self.nvars {
                            return Err(Error::VariableOutOfRange {
                                name: c.to_string(),
                                nvars: self.nvars,
                            });
                        }
                        letter_index
                    }
                }
            }
            _ => return Err(self.error("expected a variable")),
        };
        let power = if self.peek() == Some('^') {
            self.bump();
            let at = self.pos();
            match self.number() {
                Some(0) => {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "exponent must be positive".into(),
                    })
                }
                Some(n) => n,
                None => {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "expected an exponent".into(),
                    })
                }
            }
        } else {
            1
        };
        Ok((var, power))
    }

    fn number(&mut self) -> Option<u64> {
        let mut value: Option<u64> = None;
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = Some(
                value
                    .unwrap_or(0)
                    .saturating_mul(10)
                    .saturating_add(d as u64),
            );
            self.bump();
        }
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(i: &MonomialIdeal) -> Vec<Vec<u32>> {
        i.generators().iter().map(|g| g.to_vec()).collect()
    }

    #[test]
    fn parses_colength_eight_example() {
        let i = parse_ideal("x^2,y^2,z^4,x*y,x*z^2,y*z^2", 3).unwrap();
        let mut got = rows(&i);
        got.sort();
        let mut want = vec![
            vec![2, 0, 0],
            vec![0, 2, 0],
            vec![0, 0, 4],
            vec![1, 1, 0],
            vec![1, 0, 2],
            vec![0, 1, 2],
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn maximal_ideal_and_redundancy() {
        assert_eq!(
            rows(&parse_ideal("x,y,z", 3).unwrap()),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            rows(&parse_ideal("x^2,x^3,y", 3).unwrap()),
            vec![vec![0, 1, 0], vec![2, 0, 0]]
        );
    }

    #[test]
    fn whitespace_and_indexed_names() {
        let a = parse_ideal(" x1^2 , x2 * x3 ,x4", 4).unwrap();
        assert_eq!(render(&a), "x4,x1^2,x2*x3");
        let b = parse_ideal("x1, y ,z^ 2", 3).unwrap();
        assert_eq!(b, parse_ideal("x,y,z^2", 3).unwrap());
        assert_eq!(rows(&parse_ideal("x*x*y", 3).unwrap()), vec![vec![2, 1, 0]]);
    }

    #[test]
    fn errors_report_positions() {
        match parse_ideal("x^2,,y", 3) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_ideal("x^,y", 3) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ideal("x y", 3), Err(Error::Syntax { .. })));
        assert!(matches!(parse_ideal("x^0", 3), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_ideal("z", 2),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            parse_ideal("x5", 4),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert!(matches!(parse_ideal("  ", 3), Err(Error::EmptyGenerators)));
    }

    #[test]
    fn render_round_trip() {
        let i = parse_ideal("x^2,y^3,z^3,x*y,x*z,y*z^2,y^2*z", 3).unwrap();
        assert_eq!(render(&i), "x^2,x*y,x*z,y^3,y^2*z,y*z^2,z^3");
        assert_eq!(parse_ideal(&render(&i), 3).unwrap(), i);
    }
}
