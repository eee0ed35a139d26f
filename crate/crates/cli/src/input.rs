use std::fmt;
use std::io::Read;
use std::path::Path;

use boric::Error;

/// Text of an argument that may be a file, `-` for stdin, or inline.
pub struct Source {
    pub text: String,
    pub origin: String,
}

impl Source {
    pub fn inline(text: &str) -> Self {
        Source {
            text: text.to_string(),
            origin: "argument".into(),
        }
    }
}

pub fn read_arg(arg: &str) -> Result<Source, Failure> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(format!("reading stdin: {e}")))?;
        return Ok(Source {
            text,
            origin: "stdin".into(),
        });
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| Failure::Io(format!("reading {arg}: {e}")))?;
        return Ok(Source {
            text,
            origin: arg.to_string(),
        });
    }
    if arg.ends_with(".nwk") || arg.ends_with(".spec") {
        return Err(Failure::Io(format!("no such file: {arg}")));
    }
    Ok(Source::inline(arg))
}

pub fn read_file(path: &str) -> Result<Source, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("reading {path}: {e}")))?;
    Ok(Source {
        text,
        origin: path.to_string(),
    })
}

#[derive(Debug)]
pub enum Failure {
    Lib {
        err: Error,
        context: Option<(String, String)>,
    },
    Io(String),
    Usage(String),
    /// The brute-force path disagreed.
    Oracle(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib {
                err: Error::OutOfRange { .. },
                ..
            } => 3,
            Failure::Oracle(_) => 4,
            _ => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Lib { err, context: None }
    }
}

pub trait Within<T> {
    /// Attaches the text the error position refers to.
    fn within(self, src: &Source) -> Result<T, Failure>;
}

impl<T> Within<T> for Result<T, Error> {
    fn within(self, src: &Source) -> Result<T, Failure> {
        self.map_err(|err| Failure::Lib {
            err,
            context: Some((src.origin.clone(), src.text.clone())),
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib { err, context } => {
                write!(f, "error: {err}")?;
                if let (Error::Parse(p), Some((origin, text))) = (err, context) {
                    let pos = p.position.min(text.len());
                    let start = text[..pos].rfind('\n').map_or(0, |i| i + 1);
                    let end = text[pos..].find('\n').map_or(text.len(), |i| pos + i);
                    let line = text[..start].matches('\n').count() + 1;
                    let col = text[start..pos].chars().count();
                    write!(f, "\n  --> {origin}, line {line}\n  | {}\n  | {}^", &text[start..end], " ".repeat(col))?;
                }
                Ok(())
            }
            Failure::Io(m) => write!(f, "error: {m}"),
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Oracle(m) => write!(f, "oracle disagreement: {m}"),
        }
    }
}

impl std::error::Error for Failure {}

/// `1,3,7` or `1 3 7`.
pub fn parse_labels(text: &str) -> Result<Vec<u32>, Failure> {
    let src = Source::inline(text);
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(|c: char| c == ',' || c.is_whitespace()) {
        if !piece.is_empty() {
            let v = piece.parse().map_err(|_| {
                Error::Parse(boric::ParseError::new(offset, format!("`{piece}` is not a leaf label")))
            });
            out.push(v.within(&src)?);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}
