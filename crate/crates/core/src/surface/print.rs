use std::fmt::{self, Display, Formatter};

use super::{Case, Expectation, Judgment};
use crate::syntax::{AtomContext, DataSort, Declaration, Signature, Sort, Telescope, Term};

fn list<T: Display>(f: &mut Formatter<'_>, items: &[T], sep: &str) -> fmt::Result {
    for (i, t) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Term::Atom(a) => write!(f, "{a}"),
            Term::Param(x, ts) => {
                write!(f, "{x}")?;
                if !ts.is_empty() {
                    f.write_str("[")?;
                    list(f, ts, ",")?;
                    f.write_str("]")?;
                }
                Ok(())
            }
            Term::App(c, ts) => {
                f.write_str(c)?;
                if !ts.is_empty() {
                    f.write_str("(")?;
                    list(f, ts, ",")?;
                    f.write_str(")")?;
                }
                Ok(())
            }
            Term::Abs(a, annot, body) => write!(f, "[{a}:{annot}] {body}"),
        }
    }
}

impl Display for DataSort {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctor)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            list(f, &self.args, ",")?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Display for Sort {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Sort::Data(d) => write!(f, "{d}"),
            Sort::Abs(a, annot, body) => write!(f, "[{a}:{annot}] {body}"),
        }
    }
}

impl Display for Telescope {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for (i, b) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", b.param, b.sort)?;
        }
        Ok(())
    }
}

impl Display for AtomContext {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for (i, (a, s)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}:{s}")?;
        }
        Ok(())
    }
}

impl Display for Declaration {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let kw = if self.target.is_some() { "op" } else { "sort" };
        write!(f, "{kw} {}", self.name)?;
        if !self.telescope.is_empty() {
            write!(f, "({})", self.telescope)?;
        }
        if let Some(t) = &self.target {
            write!(f, " : {t}")?;
        }
        if !self.fresh.is_empty() {
            f.write_str(" / ")?;
            for (i, c) in self.fresh.constraints.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{} # {}", c.atom, c.param)?;
            }
        }
        f.write_str(";")
    }
}

impl Display for Signature {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for d in &self.decls {
            writeln!(f, "{d}")?;
        }
        Ok(())
    }
}

fn turnstile(f: &mut Formatter<'_>, ctx: &AtomContext) -> fmt::Result {
    if ctx.is_empty() {
        f.write_str("|- ")
    } else {
        write!(f, "{ctx} |- ")
    }
}

impl Display for Judgment {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Judgment::HasSort { ctx, term, sort } => {
                turnstile(f, ctx)?;
                write!(f, "{term} : {sort}")
            }
            Judgment::IsSort { ctx, sort } => {
                turnstile(f, ctx)?;
                write!(f, "{sort} sort")
            }
            Judgment::Fits { ctx, args, ctor } => {
                turnstile(f, ctx)?;
                f.write_str("(")?;
                list(f, args, ", ")?;
                write!(f, ") fits {ctor}")
            }
            Judgment::Fresh { atom, term } => write!(f, "{atom} # {term}"),
        }
    }
}

impl Display for Case {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let e = match self.expect {
            Expectation::Ok => "OK",
            Expectation::Fail => "FAIL",
        };
        write!(f, "{e} {}", self.judgment)
    }
}

#[cfg(test)]
mod tests {
    use crate::surface::{parse_signature, parse_term};
    use crate::syntax::{Atom, DataSort, Term};

    #[test]
    fn abstraction_rendering() {
        let t = Term::abs(
            Atom::new("a"),
            DataSort::constant("Lam"),
            Term::Atom(Atom::new("a")),
        );
        assert_eq!(t.to_string(), "[a:Lam] a");
    }

    #[test]
    fn signature_round_trip() {
        let text = "sort Form;\nsort D(_:Form);\nop bot : Form;\nop imp(_:Form, _:Form) : Form;\n\
                    op imp_i(P:Form, Q:Form, _:[h:D(P)] D(Q)) : D(imp(P,Q)) / h # Q;\n";
        let sig = parse_signature(text).unwrap();
        assert_eq!(sig.to_string(), text);
        assert_eq!(parse_signature(&sig.to_string()).unwrap(), sig);
    }

    #[test]
    fn generated_atoms_round_trip() {
        let sig = parse_signature("sort Term; op zero : Term;").unwrap();
        let t = parse_term("[c'2:Term] [_'1:Term] c'2", &sig).unwrap();
        assert_eq!(t.to_string(), "[c'2:Term] [_'1:Term] c'2");
    }
}
