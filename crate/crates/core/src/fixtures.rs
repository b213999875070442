//! Small worked examples shared by the documentation and the test suite.
//!
//! The centrepiece is [`meetings`]: six people `P1`..`P6` attending four
//! meetings `M1`..`M4`. Each meeting carries a `time` interval, and each
//! attendance records the set of `topics` that person raised in that
//! meeting. It is deliberately tiny so every derived structure (line
//! graphs, walk graphs, traces) can be checked by hand.

use crate::attributes::{marginalize_edges, Marginalizer};
use crate::hypergraph::AttributedHypergraph;
use crate::value::AttributeValue;

/// The meetings example: six people, four meetings, per-attendance topics.
///
/// Membership: `M1 = {P4, P5}`, `M2 = {P5, P6}`, `M3 = {P2, P3, P4}`,
/// `M4 = {P1, P2, P3}`. Meeting times: `M1 = [0, 1]`, `M2 = [2, 3]`,
/// `M3 = [2, 3]` (parallel to `M2`), `M4 = [4, 5]`.
pub fn meetings() -> AttributedHypergraph<f64> {
    let topics = |items: &[&str]| AttributeValue::set(items.iter().copied());
    AttributedHypergraph::builder()
        .vertices(["P1", "P2", "P3", "P4", "P5", "P6"])
        .edge("M1", ["P4", "P5"])
        .edge("M2", ["P5", "P6"])
        .edge("M3", ["P2", "P3", "P4"])
        .edge("M4", ["P1", "P2", "P3"])
        .edge_attr("M1", "time", AttributeValue::interval(0.0, 1.0).unwrap())
        .edge_attr("M2", "time", AttributeValue::interval(2.0, 3.0).unwrap())
        .edge_attr("M3", "time", AttributeValue::interval(2.0, 3.0).unwrap())
        .edge_attr("M4", "time", AttributeValue::interval(4.0, 5.0).unwrap())
        .incidence_attr("P4", "M1", "topics", topics(&["A", "B"]))
        .incidence_attr("P5", "M1", "topics", topics(&["A", "C"]))
        .incidence_attr("P5", "M2", "topics", topics(&["E", "F"]))
        .incidence_attr("P6", "M2", "topics", topics(&["F"]))
        .incidence_attr("P2", "M3", "topics", topics(&["C", "D"]))
        .incidence_attr("P3", "M3", "topics", topics(&["B", "C"]))
        .incidence_attr("P4", "M3", "topics", topics(&["D"]))
        .incidence_attr("P1", "M4", "topics", topics(&["C"]))
        .incidence_attr("P2", "M4", "topics", topics(&["C"]))
        .incidence_attr("P3", "M4", "topics", topics(&["C"]))
        .build()
        .expect("meetings fixture is well formed")
}

/// [`meetings`] with the per-attendance topics additionally rolled up to
/// each meeting (set union over its attendances), so both incidence-level
/// and edge-level `topics` are available.
pub fn meetings_with_topics() -> AttributedHypergraph<f64> {
    let h = meetings();
    let by_edge =
        marginalize_edges(&h, "topics", Marginalizer::SetUnion).expect("toy topics roll up");
    h.with_edge_attrs("topics", &by_edge)
}

/// A small forum-style post table: three users writing into three threads
/// on the same board. Rows are `user_id,thread_id,class,timestamp`.
pub fn forum_posts_csv() -> &'static str {
    "\
user_id,thread_id,class,timestamp
user1,thread1,board1,1
user1,thread1,board1,2
user1,thread1,board1,3
user1,thread2,board1,4
user1,thread2,board1,7
user2,thread1,board1,8
user2,threadM,board1,13
userN,thread1,board1,5
userN,thread1,board1,10
userN,threadM,board1,2
userN,threadM,board1,7
"
}
