use serde_json::{Map, Value};

/// Command output: text lines for humans and flat key-value fields for
/// `--json`. `failure` names the first failed expectation, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub fields: Vec<(String, String)>,
    pub failure: Option<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    /// Add a field and print it as `key=value`.
    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        let v = value.to_string();
        self.lines.push(format!("{key}={v}"));
        self.fields.push((key.to_string(), v));
        self
    }

    /// Add a field without a text line.
    pub fn quiet_field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    /// Append the lines of a multi-line display.
    pub fn block(&mut self, text: &str) -> &mut Self {
        self.lines.extend(text.lines().map(str::to_string));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }

    /// Flat JSON object; booleans and integers keep their type.
    pub fn json(&self) -> String {
        let mut m = Map::new();
        for (k, v) in &self.fields {
            let value = match v.as_str() {
                "true" => Value::Bool(true),
                "false" => Value::Bool(false),
                _ => v
                    .parse::<i64>()
                    .map(Value::from)
                    .unwrap_or_else(|_| Value::String(v.clone())),
            };
            m.insert(k.clone(), value);
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_types() {
        let mut r = Report::new();
        r.field("n", 12).field("ok", true).field("poly", "x - 1");
        assert_eq!(r.text(), "n=12\nok=true\npoly=x - 1\n");
        let v: Value = serde_json::from_str(&r.json()).unwrap();
        assert_eq!(v["n"], 12);
        assert_eq!(v["ok"], true);
        assert_eq!(v["poly"], "x - 1");
    }
}
