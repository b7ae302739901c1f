//! The two text input formats.
//!
//! Instance files: the first significant line is `eps <rational>`, every
//! following line one value. Point files: one `x y` pair per line. In both,
//! blank lines are skipped and `#` starts a comment that runs to the end of
//! the line. Tokens are rationals in the numeric module's grammar.

use super::CliError;
use crate::geom::Point;
use crate::numeric::Rational;
use crate::reductions::{Instance, ReductionError};
use std::fs;
use std::path::Path;

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            None
        } else {
            Some((idx + 1, line))
        }
    })
}

fn parse_token(token: &str, origin: &str, line: usize) -> Result<Rational, CliError> {
    token.parse().map_err(|err| CliError::Parse {
        path: origin.to_string(),
        line,
        message: format!("{err}"),
    })
}

/// Parses instance text; `origin` names the source in diagnostics.
pub fn parse_instance_text(text: &str, origin: &str) -> Result<Instance, CliError> {
    let mut lines = significant_lines(text);
    let (eps_line_no, eps_line) = lines.next().ok_or_else(|| CliError::Parse {
        path: origin.to_string(),
        line: 1,
        message: "empty input; expected a leading `eps <rational>` line".to_string(),
    })?;

    let eps_token = eps_line
        .strip_prefix("eps")
        .map(str::trim)
        .filter(|rest| !rest.is_empty() && !rest.contains(char::is_whitespace))
        .ok_or_else(|| CliError::Parse {
            path: origin.to_string(),
            line: eps_line_no,
            message: format!("expected `eps <rational>`, found `{eps_line}`"),
        })?;
    let eps = parse_token(eps_token, origin, eps_line_no)?;

    let mut values = Vec::new();
    let mut last_line = eps_line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if line.contains(char::is_whitespace) {
            return Err(CliError::Parse {
                path: origin.to_string(),
                line: line_no,
                message: format!("expected one value per line, found `{line}`"),
            });
        }
        values.push(parse_token(line, origin, line_no)?);
    }

    Instance::new(values, eps).map_err(|err| {
        let line = match err {
            ReductionError::NonPositiveEpsilon(_) => eps_line_no,
            _ => last_line,
        };
        CliError::Parse {
            path: origin.to_string(),
            line,
            message: format!("{err}"),
        }
    })
}

pub fn read_instance_file(path: &Path) -> Result<Instance, CliError> {
    let text = fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        message: err.to_string(),
    })?;
    parse_instance_text(&text, &path.display().to_string())
}

/// Parses point text: one `x y` pair of rational tokens per line.
pub fn parse_points_text(text: &str, origin: &str) -> Result<Vec<Point>, CliError> {
    let mut points = Vec::new();
    for (line_no, line) in significant_lines(text) {
        let mut tokens = line.split_whitespace();
        let (x, y) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(x), Some(y), None) => (x, y),
            _ => {
                return Err(CliError::Parse {
                    path: origin.to_string(),
                    line: line_no,
                    message: format!("expected `x y` per line, found `{line}`"),
                })
            }
        };
        points.push(Point::new(
            parse_token(x, origin, line_no)?,
            parse_token(y, origin, line_no)?,
        ));
    }
    if points.is_empty() {
        return Err(CliError::Parse {
            path: origin.to_string(),
            line: 1,
            message: "empty input; expected at least one point line".to_string(),
        });
    }
    Ok(points)
}

pub fn read_points_file(path: &Path) -> Result<Vec<Point>, CliError> {
    let text = fs::read_to_string(path).map_err(|err| CliError::Io {
        path: path.display().to_string(),
        message: err.to_string(),
    })?;
    parse_points_text(&text, &path.display().to_string())
}

/// Serializes an instance in the file format, one value per line.
pub fn render_instance(inst: &Instance) -> String {
    let mut out = format!("eps {}\n", inst.eps());
    for value in inst.values() {
        out.push_str(&value.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_instance_with_comments_and_blanks() {
        let text = "# closeness input\n\neps 1/2   # half\n3\n-0.25\n\n7/3\n";
        let inst = parse_instance_text(text, "test").unwrap();
        assert_eq!(inst.eps(), &"1/2".parse().unwrap());
        assert_eq!(inst.values().len(), 3);
        assert_eq!(inst.values()[1], "-1/4".parse().unwrap());
    }

    #[test]
    fn instance_round_trips_through_render() {
        let text = "eps 2\n1\n1\n-3/7\n";
        let inst = parse_instance_text(text, "test").unwrap();
        assert_eq!(render_instance(&inst), text);
        let again = parse_instance_text(&render_instance(&inst), "again").unwrap();
        assert_eq!(again, inst);
    }

    #[test]
    fn reports_line_numbers_on_malformed_values() {
        let text = "eps 1\n3\nnot-a-number\n";
        let err = parse_instance_text(text, "bad.txt").unwrap_err();
        assert_eq!(
            err.to_string(),
            "bad.txt:3: malformed rational token `not-a-number`"
        );
    }

    #[test]
    fn rejects_missing_eps_header() {
        let err = parse_instance_text("3\n4\n", "x").unwrap_err();
        assert!(err.to_string().contains("expected `eps <rational>`"));

        let err = parse_instance_text("", "x").unwrap_err();
        assert!(err.to_string().contains("empty input"));
    }

    #[test]
    fn rejects_non_positive_eps_at_its_line() {
        let err = parse_instance_text("# c\neps 0\n1\n", "x").unwrap_err();
        assert_eq!(err.to_string(), "x:2: epsilon must be positive, got 0");
    }

    #[test]
    fn rejects_instance_without_values() {
        let err = parse_instance_text("eps 1\n# nothing\n", "x").unwrap_err();
        assert!(err.to_string().contains("at least one value"));
    }

    #[test]
    fn parses_point_lines() {
        let text = "0 0\n1/2 1/4 # lifted\n-1 1\n";
        let points = parse_points_text(text, "pts").unwrap();
        assert_eq!(points.len(), 3);
        assert_eq!(points[1], Point::new("1/2".parse().unwrap(), "1/4".parse().unwrap()));
    }

    #[test]
    fn rejects_malformed_point_lines() {
        assert!(parse_points_text("1\n", "p").is_err());
        assert!(parse_points_text("1 2 3\n", "p").is_err());
        assert!(parse_points_text("", "p").is_err());
        let err = parse_points_text("0 0\n1 x\n", "p").unwrap_err();
        assert_eq!(err.to_string(), "p:2: malformed rational token `x`");
    }
}
