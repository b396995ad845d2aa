//! Ordered key/value reports, rendered as JSON or as flat `a.b = v` text.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: i64 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<Value>),
    Map(Report),
}

/// Entries keep insertion order in both renderings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    /// A top-level report carrying the schema version and command name.
    pub fn for_command(command: &str) -> Report {
        let mut r = Report::new();
        r.push("schema", SCHEMA_VERSION);
        r.push("command", command);
        r
    }

    /// Sets `key`, replacing an earlier value in place.
    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Report {
        let key = key.into();
        let value = value.into();
        match self.entries.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = value,
            None => self.entries.push((key, value)),
        }
        self
    }

    /// Nested map under `key`, created if absent.
    pub fn section(&mut self, key: &str) -> &mut Report {
        if !matches!(self.get(key), Some(Value::Map(_))) {
            self.push(key, Report::new());
        }
        match self.entries.iter_mut().find(|(k, _)| k == key) {
            Some((_, Value::Map(r))) => r,
            _ => unreachable!(),
        }
    }

    /// Looks up a dotted path such as `s4.bousfield_classes`.
    pub fn get(&self, path: &str) -> Option<&Value> {
        let (head, rest) = match path.split_once('.') {
            Some((h, r)) => (h, Some(r)),
            None => (path, None),
        };
        let v = self.entries.iter().find(|(k, _)| k == head).map(|(_, v)| v)?;
        match (rest, v) {
            (None, v) => Some(v),
            (Some(r), Value::Map(m)) => m.get(r),
            _ => None,
        }
    }

    pub fn entries(&self) -> &[(String, Value)] {
        &self.entries
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text("", &mut out);
        out
    }

    fn write_text(&self, prefix: &str, out: &mut String) {
        for (k, v) in &self.entries {
            let key = if prefix.is_empty() {
                k.clone()
            } else {
                format!("{prefix}.{k}")
            };
            match v {
                Value::Map(m) => m.write_text(&key, out),
                Value::List(items) if items.iter().any(|x| matches!(x, Value::Map(_) | Value::List(_))) => {
                    for (i, item) in items.iter().enumerate() {
                        match item {
                            Value::Map(m) => m.write_text(&format!("{key}.{i}"), out),
                            other => out.push_str(&format!("{key}.{i} = {}\n", other.inline())),
                        }
                    }
                }
                other => out.push_str(&format!("{key} = {}\n", other.inline())),
            }
        }
    }
}

impl Value {
    fn inline(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Text(s) => s.clone(),
            Value::List(items) => {
                let parts: Vec<String> = items.iter().map(Value::inline).collect();
                format!("[{}]", parts.join(", "))
            }
            Value::Map(m) => {
                let parts: Vec<String> = m.entries.iter().map(|(k, v)| format!("{k}: {}", v.inline())).collect();
                format!("{{{}}}", parts.join(", "))
            }
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Value::Text(s) => Some(s),
            _ => None,
        }
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Bool(b) => serializer.serialize_bool(*b),
            Value::Int(i) => serializer.serialize_i64(*i),
            Value::Text(s) => serializer.serialize_str(s),
            Value::List(items) => {
                let mut seq = serializer.serialize_seq(Some(items.len()))?;
                for item in items {
                    seq.serialize_element(item)?;
                }
                seq.end()
            }
            Value::Map(m) => m.serialize(serializer),
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Value {
        Value::Bool(b)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Value {
        Value::Int(i)
    }
}

impl From<usize> for Value {
    fn from(i: usize) -> Value {
        Value::Int(i as i64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Value {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Value {
        Value::Text(s)
    }
}

impl From<Report> for Value {
    fn from(r: Report) -> Value {
        Value::Map(r)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(items: Vec<T>) -> Value {
        Value::List(items.into_iter().map(Into::into).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_flattening() {
        let mut r = Report::for_command("demo");
        r.section("s4").push("classes", 2usize).push("names", vec!["T", "⟨0⟩"]);
        r.push("ok", true);
        assert_eq!(
            r.to_text(),
            "schema = 1\ncommand = demo\ns4.classes = 2\ns4.names = [T, ⟨0⟩]\nok = true\n"
        );
        assert!(r.to_json().find("\"schema\"").unwrap() < r.to_json().find("\"ok\"").unwrap());
        assert_eq!(r.get("s4.classes").and_then(Value::as_int), Some(2));
        r.push("ok", false);
        assert_eq!(r.entries().len(), 4);
    }

    #[test]
    fn lists_of_maps() {
        let mut a = Report::new();
        a.push("x", 1usize);
        let mut r = Report::new();
        r.push("items", vec![a.clone(), a]);
        assert_eq!(r.to_text(), "items.0.x = 1\nitems.1.x = 1\n");
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["items"][1]["x"], 1);
    }
}
