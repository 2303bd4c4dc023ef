use crate::error::{invalid, Result};

/// Labelled rows of finite values, all of equal arity.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    labels: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(invalid("labels", "a table needs at least one column"));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.contains([',', '\n', '\r']))
        {
            return Err(invalid(
                "labels",
                format!("column label {bad:?} is empty or contains a delimiter"),
            ));
        }
        Ok(Self {
            labels,
            rows: Vec::new(),
        })
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.labels.len() {
            return Err(invalid(
                "row",
                format!(
                    "arity {} does not match {} labels",
                    row.len(),
                    self.labels.len()
                ),
            ));
        }
        if let Some(v) = row.iter().find(|v| !v.is_finite()) {
            return Err(invalid("row", format!("non-finite value {v}")));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn column(&self, label: &str) -> Option<Vec<f64>> {
        let j = self.column_index(label)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

/// A [`Table`] whose first column is `t`, strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    table: Table,
}

impl TimeSeries {
    /// `labels` names the value columns; `t` is prepended.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let all = std::iter::once("t".to_string()).chain(labels.into_iter().map(Into::into));
        Ok(Self {
            table: Table::new(all)?,
        })
    }

    pub fn push(&mut self, t: f64, values: &[f64]) -> Result<()> {
        if let Some(last) = self.table.rows.last() {
            if !(t > last[0]) {
                return Err(invalid(
                    "t",
                    format!("times must increase strictly ({t} after {})", last[0]),
                ));
            }
        }
        let mut row = Vec::with_capacity(values.len() + 1);
        row.push(t);
        row.extend_from_slice(values);
        self.table.push(row)
    }

    pub fn labels(&self) -> &[String] {
        self.table.labels()
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        self.table.rows()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn times(&self) -> Vec<f64> {
        self.table.rows.iter().map(|r| r[0]).collect()
    }

    pub fn column(&self, label: &str) -> Option<Vec<f64>> {
        self.table.column(label)
    }

    pub fn last(&self) -> Option<&[f64]> {
        self.table.rows.last().map(Vec::as_slice)
    }

    pub fn as_table(&self) -> &Table {
        &self.table
    }

    pub fn into_table(self) -> Table {
        self.table
    }
}

impl AsRef<Table> for TimeSeries {
    fn as_ref(&self) -> &Table {
        &self.table
    }
}

impl AsRef<Table> for Table {
    fn as_ref(&self) -> &Table {
        self
    }
}
