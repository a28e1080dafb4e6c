use rug::Float;
use stieltjes::catalog::{run_catalog, Catalog, Filter, IdentityEntry, Selector, Side, Tag};
use stieltjes::{Error, PrecisionContext};

fn entry(id: &str, lhs: &'static str, rhs: &'static str) -> IdentityEntry {
    IdentityEntry::new(
        id,
        "one equals one",
        "unit",
        &[Tag::Series],
        Side::new(lhs, |c| Ok(c.real(1))),
        Side::new(rhs, |c| Ok(c.real(1))),
    )
}

#[test]
fn builtin_catalog_shape() {
    let cat = Catalog::builtin();
    assert!(cat.len() >= 35, "only {} entries", cat.len());
    for e in cat.entries() {
        assert!(!e.paper_anchor.trim().is_empty(), "{} lacks an anchor", e.id);
        assert_ne!(e.lhs.route, e.rhs.route, "{}", e.id);
        assert!(!e.tags.is_empty(), "{} has no tags", e.id);
    }
    let required = [
        "I-2.2", "I-2.10", "I-2.15", "I-2.20", "I-2.23", "I-2.25", "I-3.6", "I-3.9", "I-3.5", "I-3.7", "I-3.8",
        "I-3.10", "I-4.14", "I-4.16", "I-4.16.2", "I-4.20", "I-4.22", "I-5.1", "I-5.3", "I-6.4", "I-6.10",
        "I-6.11.1", "I-6.14", "I-6.17", "I-6.21", "I-6.24", "I-7.2", "I-8.2", "I-8.3", "I-8.5", "I-8.6", "I-8.P",
        "I-9.1", "I-9.2", "I-9.4a", "I-9.5a", "I-9.5b", "I-9.E", "I-9.7",
    ];
    for id in required {
        assert!(cat.entries().iter().any(|e| e.family() == id), "missing {id}");
    }
    let slow: Vec<_> = cat.entries().iter().filter(|e| e.has_tag(Tag::Slow)).map(|e| e.family()).collect();
    assert_eq!(slow, ["I-2.2", "I-8.2", "I-8.5"]);
}

#[test]
fn registry_audit() {
    assert!(Catalog::new(vec![entry("a", "x", "y"), entry("b", "x", "y")]).is_ok());
    assert!(matches!(Catalog::new(vec![entry("a", "x", "x")]), Err(Error::Registry(_))));
    assert!(matches!(Catalog::new(vec![entry("a", "x", "y"), entry("a", "x", "z")]), Err(Error::Registry(_))));
    let no_anchor = IdentityEntry::new("c", "d", " ", &[], Side::new("x", |c| Ok(c.real(0))), Side::new("y", |c| Ok(c.real(0))));
    assert!(matches!(Catalog::new(vec![no_anchor]), Err(Error::Registry(_))));
}

#[test]
fn selectors() {
    let cat = Catalog::builtin();
    let (all, skipped) = cat.select(&Filter::all()).unwrap();
    assert_eq!(skipped, 3);
    assert_eq!(all.len() + skipped, cat.len());
    let (with_slow, skipped) = cat.select(&Filter { selector: Selector::All, include_slow: true }).unwrap();
    assert_eq!((with_slow.len(), skipped), (cat.len(), 0));

    let (dbl, _) = cat.select(&Filter::parse("tag:double_integral").unwrap()).unwrap();
    let ids: Vec<_> = dbl.iter().map(|e| e.id.as_str()).collect();
    assert_eq!(ids, ["I-9.2", "I-9.2c", "I-9.5a", "I-9.6a", "I-9.4a"]);

    let (fam, _) = cat.select(&Filter::parse("I-3.10").unwrap()).unwrap();
    assert_eq!(fam.len(), 10);
    let (one, _) = cat.select(&Filter::parse("I-3.10[m=2,u=1]").unwrap()).unwrap();
    assert_eq!(one.len(), 1);
    // Slow entries run when named.
    let (slow, skipped) = cat.select(&Filter::parse("tag:slow").unwrap()).unwrap();
    assert_eq!((slow.len(), skipped), (3, 0));

    assert!(matches!(Filter::parse("tag:nonsense"), Err(Error::UnknownSelector(_))));
    assert!(matches!(cat.select(&Filter::parse("I-99").unwrap()), Err(Error::UnknownSelector(_))));
}

#[test]
fn single_entry_passes_well_inside_tolerance() {
    let ctx = PrecisionContext::default();
    let r = run_catalog(&Catalog::builtin(), &Filter::parse("I-6.21").unwrap(), &ctx).unwrap();
    assert_eq!(r.entries.len(), 1);
    let o = &r.entries[0];
    assert!(o.pass);
    let err: Float = Float::with_val(64, Float::parse(&o.abs_error).unwrap());
    assert!(err < 1e-25);
    assert_eq!((r.summary.total, r.summary.passed, r.summary.failed), (1, 1, 0));
}

#[test]
fn printed_errors_fail_with_both_values_or_a_reason() {
    let ctx = PrecisionContext::for_target(20);
    let cat = Catalog::builtin();
    for (id, fixed) in [("I-9.1", "I-9.1c"), ("I-9.5b", "I-9.5bc"), ("I-3.5[u=2]", "I-3.5c[u=2]")] {
        let r = run_catalog(&cat, &Filter::parse(id).unwrap(), &ctx).unwrap();
        let o = &r.entries[0];
        assert!(!o.pass, "{id} should fail as printed");
        assert!(o.note.is_some());
        assert_ne!(o.lhs, o.rhs);
        let r = run_catalog(&cat, &Filter::parse(fixed).unwrap(), &ctx).unwrap();
        assert!(r.entries[0].pass, "{fixed}");
    }
    // Divergent printed integrals are rejected before any quadrature.
    for id in ["I-2.23[y=2]", "I-2.25"] {
        let r = run_catalog(&cat, &Filter::parse(id).unwrap(), &ctx).unwrap();
        let o = &r.entries[0];
        assert!(!o.pass);
        assert!(o.error.as_deref().unwrap().contains("diverges at 0"), "{id}: {:?}", o.error);
    }
}

#[test]
fn reports_are_deterministic_and_ordered() {
    let ctx = PrecisionContext::for_target(20);
    let cat = Catalog::builtin();
    let f = Filter::parse("tag:series").unwrap();
    let strip = |r: stieltjes::catalog::IdentityReport| {
        r.entries.into_iter().map(|e| (e.id, e.lhs, e.rhs, e.abs_error, e.pass)).collect::<Vec<_>>()
    };
    let a = strip(run_catalog(&cat, &f, &ctx).unwrap());
    let b = strip(run_catalog(&cat, &f, &ctx).unwrap());
    assert_eq!(a, b);
    let order: Vec<_> = cat.entries().iter().filter(|e| e.has_tag(Tag::Series)).map(|e| e.id.clone()).collect();
    assert_eq!(a.iter().map(|e| e.0.clone()).collect::<Vec<_>>(), order);
}

#[test]
fn double_integral_entries_cap_their_context() {
    // At 40 digits the capped entries still run at 20 target digits and meet their own tolerance.
    let ctx = PrecisionContext::for_target(40);
    let r = run_catalog(&Catalog::builtin(), &Filter::parse("I-9.4a").unwrap(), &ctx).unwrap();
    assert!(r.entries[0].pass);
    assert_eq!(r.entries[0].tolerance, "1e-8");
}
