use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weakdeg_core::class::check_class;
use weakdeg_core::corpus::{self, SEVEN_FACE_LABELS};
use weakdeg_core::structure::*;
use weakdeg_core::PlaneGraph;

fn label(name: &str) -> usize {
    SEVEN_FACE_LABELS.iter().position(|&l| l == name).unwrap()
}

fn seven_face(pg: &PlaneGraph) -> usize {
    (0..pg.face_count()).find(|&f| pg.face_degree(f) == 7).unwrap()
}

#[test]
fn shared_edges_control_the_four_face() {
    let pg = corpus::seven_face_host();
    let (x, a, c, w) = (label("x"), label("a"), label("c"), label("w"));
    let four = pg.face_of_dart(x, a).filter(|&f| pg.face_degree(f) == 4).or(pg.face_of_dart(a, x)).unwrap();
    assert_eq!(pg.face_degree(four), 4);
    assert!(pg.face(four).walk.contains(&w));
    assert_eq!(controls(&pg, x, a), Ok(Some(four)));
    assert_eq!(controls(&pg, c, x), Ok(Some(four)));
    assert_eq!(controls(&pg, a, w), Ok(Some(four)));
    assert_eq!(controls(&pg, a, label("b")), Ok(None));
    assert_eq!(controls(&pg, a, c), Err(StructureError::NotAnEdge(a, c)));
}

#[test]
fn no_control_on_cycles_and_cube() {
    let c8 = corpus::cycle(8);
    let cube = corpus::cube();
    for pg in [&c8, &cube] {
        for (u, v) in pg.graph().edges() {
            assert_eq!(controls(pg, u, v), Ok(None));
        }
    }
}

#[test]
fn seven_face_profile() {
    let pg = corpus::seven_face_host();
    let f = seven_face(&pg);
    let p = face_profile(&pg, f).unwrap();
    let walk = &pg.face(f).walk;
    // x, a and c are semi-rich (x twice); b, y, z are rich
    for (i, &v) in walk.iter().enumerate() {
        let want = if [label("x"), label("a"), label("c")].contains(&v) {
            Richness::SemiRich
        } else {
            Richness::Rich
        };
        assert_eq!(p.richness[i], want, "occurrence {i} of vertex {v}");
    }
    assert_eq!(p.s0, 3);
    assert_eq!(p.maximal_paths.len(), 2);
    assert!(p.maximal_paths.iter().all(|m| m.len == 1 && m.four_controlling && !m.cyclic));
    // the triangle holds a leaf, so its face is not a 3-face
    assert_eq!(p.t3_prime, 0);
}

#[test]
fn profile_errors_and_trivial_faces() {
    let c8 = corpus::cycle(8);
    let p = face_profile(&c8, 0).unwrap();
    assert_eq!(p.s0, 8);
    assert!(p.richness.iter().all(|&r| r == Richness::Rich));
    assert!(p.maximal_paths.is_empty());
    let c4 = corpus::cycle(4);
    assert_eq!(face_profile(&c4, 0), Err(StructureError::FaceTooSmall { face: 0, len: 4, need: 7 }));
}

#[test]
fn ca_host_has_one_short_path() {
    let host = corpus::config_hosts().into_iter().find(|h| h.kind == ConfigKind::CA).unwrap();
    let pg = &host.pg;
    let f = pg.face_of_dart(host.get("x1"), host.get("x2")).unwrap();
    assert_eq!(pg.face_degree(f), 8);
    let p = face_profile(pg, f).unwrap();
    assert_eq!(p.maximal_paths.len(), 1);
    assert_eq!(p.maximal_paths[0].len, 1);
    assert_eq!(p.s0, 6);
    assert_eq!(p.t3_prime, 1);
}

#[test]
fn special_faces() {
    let (pg, f) = corpus::special_type_one();
    assert_eq!(is_special_8_face(&pg, f), Ok(Some(SpecialType::TypeI)));
    let (pg, f) = corpus::special_type_two();
    assert_eq!(is_special_8_face(&pg, f), Ok(Some(SpecialType::TypeII)));
    let c8 = corpus::cycle(8);
    assert_eq!(is_special_8_face(&c8, 0), Ok(None));
    let c4 = corpus::cycle(4);
    assert_eq!(is_special_8_face(&c4, 0), Err(StructureError::NotEightFace(0)));
}

#[test]
fn audit_examples() {
    assert!(structure_audit(&corpus::seven_face_host()).violations.is_empty());
    let cube = structure_audit(&corpus::cube());
    assert!(!cube.hypotheses_met);
    assert!(cube.violations.iter().any(|v| v.item == "four-face-adjacent-to-small-face"));
}

#[test]
fn audit_clean_where_hypotheses_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs: Vec<PlaneGraph> = corpus::in_class_fixtures().into_iter().map(|f| f.pg).collect();
    graphs.extend((0..60).map(|_| corpus::random_in_class(&mut rng, 18)));
    for pg in graphs {
        let r = structure_audit(&pg);
        if r.hypotheses_met {
            assert!(r.violations.is_empty(), "{:?}", r.violations);
        }
    }
}

#[test]
fn every_host_matches_its_pattern() {
    for host in corpus::config_hosts() {
        let g = host.pg.graph();
        let found = find_configurations(g);
        let mine: Vec<&ConfigMatch> = found.iter().filter(|m| m.kind == host.kind).collect();
        assert!(!mine.is_empty(), "{}", host.name());
        let hit = mine.iter().any(|m| {
            m.assignment.labels.iter().zip(&m.assignment.vertices).all(|(l, &v)| host.labels.get(l) == Some(&v))
        });
        let same_set = mine.iter().any(|m| {
            let mut want: Vec<usize> = host.labels.values().copied().collect();
            want.sort_unstable();
            m.vertex_set() == want
        });
        assert!(hit || same_set, "{}: {:?}", host.name(), mine);
        for m in &found {
            for (i, &a) in m.assignment.vertices.iter().enumerate() {
                for &b in &m.assignment.vertices[i + 1..] {
                    assert_ne!(a, b);
                }
            }
        }
    }
}

#[test]
fn matcher_agrees_with_brute_force() {
    let patterns = all_patterns();
    for fx in corpus::fixtures().into_iter().filter(|f| f.pg.graph().n() <= 30) {
        let g = fx.pg.graph();
        assert_eq!(find_pattern_matches(g, &patterns), brute_force_matches(g, &patterns), "{}", fx.name);
    }
}

#[test]
fn degree_perturbation_kills_matches() {
    for host in corpus::config_hosts() {
        let solid = match host.kind {
            ConfigKind::C_SPECIAL => "v1",
            ConfigKind::C_F3F4A | ConfigKind::C_F3F4B => "u",
            _ => "x1",
        };
        let pg = host.perturbed(solid);
        let found = find_configurations(pg.graph());
        assert!(found.is_empty(), "{}: {:?}", host.name(), found);
        assert_eq!(found, brute_force_matches(pg.graph(), &all_patterns()));
    }
}

#[test]
fn verdicts() {
    assert_eq!(structure_theorem_check(&corpus::cycle(8)), Ok(StructureVerdict::TwoMinusVertex(0)));
    assert!(matches!(
        structure_theorem_check(&corpus::seven_face_host()),
        Ok(StructureVerdict::TwoMinusVertex(_))
    ));
    let trd = corpus::truncated_rhombic_dodecahedron();
    assert_eq!(trd.graph().min_degree(), Some(3));
    assert!(matches!(structure_theorem_check(&trd), Ok(StructureVerdict::Configuration(_))));
    assert_eq!(structure_theorem_check(&corpus::k4()), Err(StructureError::NotInClass));
}

#[test]
fn truncated_rhombic_dodecahedron_shape() {
    let pg = corpus::truncated_rhombic_dodecahedron();
    assert_eq!(pg.graph().n(), 48);
    assert_eq!(pg.graph().m(), 72);
    let mut sizes: Vec<usize> = (0..pg.face_count()).map(|f| pg.face_degree(f)).collect();
    sizes.sort_unstable();
    sizes.dedup();
    assert_eq!(sizes, vec![3, 4, 8]);
    assert!(check_class(&pg).in_class);
}

#[test]
fn random_corpus_profiles_and_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..80 {
        let pg = corpus::random_in_class(&mut rng, 20);
        assert!(check_class(&pg).in_class);
        assert!(structure_theorem_check(&pg).is_ok());
        for f in (0..pg.face_count()).filter(|&f| pg.face_degree(f) >= 7) {
            let p = face_profile(&pg, f).unwrap();
            assert_eq!(p.richness.len(), p.degree);
            let on_paths: usize = p.maximal_paths.iter().map(|m| if m.cyclic { m.len } else { m.len + 1 }).sum();
            assert_eq!(p.s0 + on_paths, p.degree);
            assert!(p.t3_prime <= p.degree / 3);
        }
    }
}
