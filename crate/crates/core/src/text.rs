//! Identifier and code-text splitting shared by the embedder, the token
//! counter and the evaluation metrics.

/// True for characters that may appear inside an identifier-like word.
pub fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

/// Splits one alphanumeric word at camelCase boundaries.
///
/// `pushFront` → `push`, `Front`; `HTTPServer` → `HTTP`, `Server`;
/// `utf8Decode` → `utf8`, `Decode`. Digits stay attached to the preceding run.
pub fn split_camel(word: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = word.char_indices().collect();
    let mut parts = Vec::new();
    let mut start = 0;
    for i in 1..chars.len() {
        let (idx, cur) = chars[i];
        let prev = chars[i - 1].1;
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let lower_to_upper = (prev.is_lowercase() || prev.is_ascii_digit()) && cur.is_uppercase();
        let acronym_end =
            prev.is_uppercase() && cur.is_uppercase() && next.is_some_and(|n| n.is_lowercase());
        if lower_to_upper || acronym_end {
            parts.push(&word[start..idx]);
            start = idx;
        }
    }
    if start < word.len() {
        parts.push(&word[start..]);
    }
    parts
}

/// A lexical piece of code text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Piece<'a> {
    /// An identifier subtoken (after camelCase splitting).
    Word(&'a str),
    /// A single non-whitespace, non-word character.
    Punct(&'a str),
    /// A maximal run of whitespace.
    Space(&'a str),
}

/// Splits text into words (camel-split), single punctuation characters and
/// whitespace runs. Concatenating every piece reproduces the input.
pub fn pieces(text: &str) -> Vec<Piece<'_>> {
    let mut out = Vec::new();
    let mut iter = text.char_indices().peekable();
    while let Some((start, c)) = iter.next() {
        if is_word_char(c) {
            let mut end = start + c.len_utf8();
            while let Some(&(i, n)) = iter.peek() {
                if !is_word_char(n) {
                    break;
                }
                end = i + n.len_utf8();
                iter.next();
            }
            out.extend(split_camel(&text[start..end]).into_iter().map(Piece::Word));
        } else if c.is_whitespace() {
            let mut end = start + c.len_utf8();
            while let Some(&(i, n)) = iter.peek() {
                if !n.is_whitespace() {
                    break;
                }
                end = i + n.len_utf8();
                iter.next();
            }
            out.push(Piece::Space(&text[start..end]));
        } else {
            out.push(Piece::Punct(&text[start..start + c.len_utf8()]));
        }
    }
    out
}

/// Lowercased identifier subtokens of `text`; punctuation and whitespace are
/// dropped. This is the bag used by the built-in embedder.
pub fn lower_subtokens(text: &str) -> Vec<String> {
    pieces(text)
        .into_iter()
        .filter_map(|p| match p {
            Piece::Word(w) => Some(w.to_lowercase()),
            _ => None,
        })
        .collect()
}

/// Removes whitespace outside of string literals.
pub fn strip_whitespace_outside_strings(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut quote: Option<char> = None;
    let mut escaped = false;
    for c in text.chars() {
        match quote {
            Some(q) => {
                out.push(c);
                if escaped {
                    escaped = false;
                } else if c == '\\' {
                    escaped = true;
                } else if c == q {
                    quote = None;
                }
            }
            None => {
                if c == '"' || c == '\'' || c == '`' {
                    quote = Some(c);
                    out.push(c);
                } else if !c.is_whitespace() {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn camel_boundaries() {
        assert_eq!(split_camel("pushFront"), vec!["push", "Front"]);
        assert_eq!(split_camel("HTTPServer"), vec!["HTTP", "Server"]);
        assert_eq!(split_camel("DataStore"), vec!["Data", "Store"]);
        assert_eq!(split_camel("utf8Decode"), vec!["utf8", "Decode"]);
        assert_eq!(split_camel("x"), vec!["x"]);
        assert_eq!(split_camel("ALLCAPS"), vec!["ALLCAPS"]);
    }

    #[test]
    fn pieces_are_lossless() {
        let src = "  docs = ds.find_by_keyword(keyword)\n\tif äx: pass";
        let joined: String = pieces(src)
            .into_iter()
            .map(|p| match p {
                Piece::Word(s) | Piece::Punct(s) | Piece::Space(s) => s,
            })
            .collect();
        assert_eq!(joined, src);
    }

    #[test]
    fn lower_subtokens_split_snake_and_camel() {
        assert_eq!(
            lower_subtokens("DataStore.find_by_keyword"),
            vec!["data", "store", "find", "by", "keyword"]
        );
    }

    #[test]
    fn whitespace_stripping_keeps_strings() {
        assert_eq!(strip_whitespace_outside_strings("a , 'b c' ,\"d e\""), "a,'b c',\"d e\"");
    }
}
