//! Prints gold spans the normalizer gets wrong on the bundled corpus.

use hrnorm_core::{
    eval::{canonical, Corpus},
    fixtures::data_dir,
    RunConfig,
};

fn main() {
    let dir = data_dir().join("corpus");
    let corpus = Corpus::load(&dir.join("gold.tsv"), &dir.join("texts")).expect("corpus");
    let (report, outputs) = corpus.run(&RunConfig::default()).expect("run");
    for g in &corpus.gold {
        let recs = &outputs[&g.text_id].records;
        let found = recs.iter().find(|r| r.offset == g.byte_start && r.end() == g.byte_end);
        let ok = found
            .and_then(|r| r.expansion.as_ref())
            .is_some_and(|e| g.gold_expansions.iter().any(|x| canonical(x) == canonical(e)));
        if !ok {
            let text = &corpus.texts[&g.text_id];
            let got = found.map(|r| format!("{:?} {:?}", r.class, r.expansion));
            let near: Vec<_> = recs
                .iter()
                .filter(|r| r.offset < g.byte_end && r.end() > g.byte_start)
                .map(|r| format!("[{}] {:?}", r.surface, r.class))
                .collect();
            println!(
                "{} {:?} {:?} -> {:?} | overlapping {:?}",
                g.text_id,
                &text[g.byte_start..g.byte_end],
                g.gold_expansions[0],
                got,
                near
            );
        }
    }
    println!("{}", hrnorm_core::eval::render_report(&report, hrnorm_core::eval::ReportFormat::Text));
}
