//! Ingestion of time-stamped post logs into post arrays and attributed
//! hypergraphs, plus a seeded synthetic generator for migration-shaped
//! data.

use std::collections::BTreeMap;
use std::io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{AttributedHypergraph, HypergraphBuilder};
use crate::scalar::TimeScalar;
use crate::value::{AttributeValue, Interval};

/// One post event: a user posting to a thread at a time. The field names
/// double as the CSV header (`user_id,thread_id,class,timestamp`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PostRow<T> {
    pub user_id: String,
    pub thread_id: String,
    pub class: String,
    pub timestamp: T,
}

/// User × thread array of post timestamp lists with one class label per
/// thread.
#[derive(Debug, Clone, PartialEq)]
pub struct PostArray<T> {
    users: Vec<String>,
    threads: Vec<String>,
    /// Class label per thread, parallel to `threads`.
    classes: Vec<String>,
    /// Non-empty cells only, keyed by (user index, thread index).
    cells: BTreeMap<(usize, usize), Vec<T>>,
}

impl<T: TimeScalar> PostArray<T> {
    /// Builds the array from rows, assigning user/thread indices in
    /// first-seen order. Rejects non-finite timestamps and threads that
    /// appear under two different class labels.
    pub fn from_rows<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = PostRow<T>>,
    {
        let mut pa = PostArray {
            users: Vec::new(),
            threads: Vec::new(),
            classes: Vec::new(),
            cells: BTreeMap::new(),
        };
        let mut user_index: BTreeMap<String, usize> = BTreeMap::new();
        let mut thread_index: BTreeMap<String, usize> = BTreeMap::new();

        for (n, row) in rows.into_iter().enumerate() {
            if !row.timestamp.is_finite() {
                return Err(Error::MalformedRow {
                    line: n as u64 + 1,
                    reason: "non-finite timestamp".to_string(),
                });
            }
            let i = *user_index.entry(row.user_id.clone()).or_insert_with(|| {
                pa.users.push(row.user_id.clone());
                pa.users.len() - 1
            });
            let j = match thread_index.get(&row.thread_id) {
                Some(j) => {
                    if pa.classes[*j] != row.class {
                        return Err(Error::InconsistentClass {
                            thread: row.thread_id,
                            first: pa.classes[*j].clone(),
                            second: row.class,
                        });
                    }
                    *j
                }
                None => {
                    pa.threads.push(row.thread_id.clone());
                    pa.classes.push(row.class.clone());
                    thread_index.insert(row.thread_id, pa.threads.len() - 1);
                    pa.threads.len() - 1
                }
            };
            pa.cells.entry((i, j)).or_default().push(row.timestamp);
        }
        Ok(pa)
    }

    pub fn n_users(&self) -> usize {
        self.users.len()
    }

    pub fn n_threads(&self) -> usize {
        self.threads.len()
    }

    pub fn users(&self) -> &[String] {
        &self.users
    }

    pub fn threads(&self) -> &[String] {
        &self.threads
    }

    pub fn class_of_thread(&self, thread: usize) -> &str {
        &self.classes[thread]
    }

    pub fn user_index(&self, name: &str) -> Option<usize> {
        self.users.iter().position(|u| u == name)
    }

    pub fn thread_index(&self, name: &str) -> Option<usize> {
        self.threads.iter().position(|t| t == name)
    }

    /// Timestamps of cell `(user, thread)`; empty when the user never
    /// posted to the thread.
    pub fn cell(&self, user: usize, thread: usize) -> &[T] {
        self.cells
            .get(&(user, thread))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All non-empty cells in (user, thread) order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &[T])> + '_ {
        self.cells.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    /// Flattens the array back into rows, cell by cell.
    pub fn to_rows(&self) -> Vec<PostRow<T>> {
        let mut rows = Vec::new();
        for ((i, j), times) in &self.cells {
            for t in times {
                rows.push(PostRow {
                    user_id: self.users[*i].clone(),
                    thread_id: self.threads[*j].clone(),
                    class: self.classes[*j].clone(),
                    timestamp: *t,
                });
            }
        }
        rows
    }
}

/// Reads posts CSV (`user_id,thread_id,class,timestamp` header) into a
/// post array. Row errors carry 1-based line numbers.
pub fn load_posts<T, R>(reader: R) -> Result<PostArray<T>>
where
    T: TimeScalar + DeserializeOwned,
    R: io::Read,
{
    let mut rdr = csv::Reader::from_reader(reader);
    let headers = rdr.headers().map_err(Error::Csv)?.clone();
    let mut rows = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(Error::Csv)?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row: PostRow<T> =
            record
                .deserialize(Some(&headers))
                .map_err(|e| Error::MalformedRow {
                    line,
                    reason: e.to_string(),
                })?;
        if !row.timestamp.is_finite() {
            return Err(Error::MalformedRow {
                line,
                reason: "non-finite timestamp".to_string(),
            });
        }
        rows.push(row);
    }
    PostArray::from_rows(rows)
}

/// Writes the array back out as posts CSV.
pub fn write_posts<T, W>(pa: &PostArray<T>, writer: W) -> Result<()>
where
    T: TimeScalar + Serialize,
    W: io::Write,
{
    let mut w = csv::Writer::from_writer(writer);
    for row in pa.to_rows() {
        w.serialize(row).map_err(Error::Csv)?;
    }
    w.flush()?;
    Ok(())
}

/// `[min, max]` of each non-empty cell.
pub fn cell_intervals<T: TimeScalar>(pa: &PostArray<T>) -> BTreeMap<(usize, usize), Interval<T>> {
    pa.cells()
        .map(|(key, times)| {
            let lo = times.iter().copied().fold(T::infinity(), T::min);
            let hi = times.iter().copied().fold(T::neg_infinity(), T::max);
            let iv = Interval::new(lo, hi).expect("timestamps validated finite at load");
            (key, iv)
        })
        .collect()
}

/// Builds the attributed hypergraph of a post array: vertices are users,
/// hyperedges are threads, membership is "posted at least once". Each
/// incidence carries its cell interval under `"time"`; each edge carries
/// the column hull under `"time"` and its class label under `"class"`.
pub fn hypergraph_from_posts<T: TimeScalar>(pa: &PostArray<T>) -> Result<AttributedHypergraph<T>> {
    let intervals = cell_intervals(pa);
    if intervals.is_empty() {
        return Err(Error::EmptyData);
    }

    // Users and threads with no posts are dropped: the hypergraph needs
    // non-empty structure on both sides.
    let mut active_users = vec![false; pa.n_users()];
    let mut active_threads = vec![false; pa.n_threads()];
    for ((i, j), _) in pa.cells() {
        active_users[i] = true;
        active_threads[j] = true;
    }

    let mut b = HypergraphBuilder::new();
    for (i, user) in pa.users().iter().enumerate() {
        if active_users[i] {
            b = b.vertex(user);
        }
    }
    for (j, thread) in pa.threads().iter().enumerate() {
        if !active_threads[j] {
            continue;
        }
        let members: Vec<&str> = (0..pa.n_users())
            .filter(|i| intervals.contains_key(&(*i, j)))
            .map(|i| pa.users()[i].as_str())
            .collect();
        b = b.edge(thread, members).edge_attr(
            thread,
            "class",
            AttributeValue::category(pa.class_of_thread(j)),
        );

        let hull = (0..pa.n_users())
            .filter_map(|i| intervals.get(&(i, j)))
            .fold(None::<Interval<T>>, |acc, iv| {
                Some(acc.map_or(*iv, |h| h.hull(iv)))
            })
            .expect("active thread has at least one cell");
        b = b.edge_attr(thread, "time", AttributeValue::Interval(hull));
    }
    for ((i, j), iv) in &intervals {
        b = b.incidence_attr(
            &pa.users()[*i],
            &pa.threads()[*j],
            "time",
            AttributeValue::Interval(*iv),
        );
    }
    b.build()
}

/// Activity span of the synthetic generator, in abstract time units.
const SYNTH_SPAN: f64 = 1000.0;
/// Posts generated per user.
const SYNTH_POSTS_PER_USER: usize = 6;

/// Generates a seeded post log of users migrating between two thread
/// classes: posts before `migration_time` land in class-`a` threads, posts
/// at or after it in class-`b` threads. Post times are uniform over
/// `[0, 1000)`, so a `migration_time` in that range splits activity and
/// anything at or above `1000` degenerates to class-`a` only.
///
/// Deterministic for a fixed seed. Panics unless `n_users >= 2` and the
/// class labels differ.
pub fn synth_migration<T: TimeScalar>(
    n_users: usize,
    class_a: &str,
    class_b: &str,
    migration_time: T,
    seed: u64,
) -> PostArray<T> {
    assert!(n_users >= 2, "need at least two users");
    assert_ne!(class_a, class_b, "class labels must differ");

    let migration = migration_time.to_f64().expect("scalar convertible to f64");
    let pool = (n_users / 20).max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut rows = Vec::with_capacity(n_users * SYNTH_POSTS_PER_USER);
    for u in 0..n_users {
        for _ in 0..SYNTH_POSTS_PER_USER {
            let t = rng.random_range(0.0..SYNTH_SPAN);
            let (prefix, class) = if t < migration {
                ("a", class_a)
            } else {
                ("b", class_b)
            };
            let thread = rng.random_range(0..pool);
            rows.push(PostRow {
                user_id: format!("u{u}"),
                thread_id: format!("{prefix}{thread}"),
                class: class.to_string(),
                timestamp: T::from_f64(t).expect("f64 fits in scalar"),
            });
        }
    }
    PostArray::from_rows(rows).expect("generated rows are well-formed")
}
