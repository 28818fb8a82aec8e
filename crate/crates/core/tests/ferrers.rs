use partkit::counting::{partition_number, q_count, v_count};
use partkit::ferrers::{add_packet, count_new_partitions, packet_gallery, partitions_gallery, FerrersDiagram};
use partkit::partition::{enumerate_partitions, EnumerationCap, Partition};

const PARTITIONS_OF_5: &str = include_str!("golden/partitions_of_5.txt");
const UNIT_PACKETS_ON_5: &str = include_str!("golden/unit_packets_on_5.txt");
const TWO_PACKET_ON_221: &str = include_str!("golden/two_packet_on_2_2_1.txt");

fn cap() -> EnumerationCap {
    EnumerationCap::default()
}

#[test]
fn golden_galleries() {
    assert_eq!(partitions_gallery(5, cap()).unwrap(), PARTITIONS_OF_5);
    assert_eq!(packet_gallery(5, 1, cap()).unwrap(), UNIT_PACKETS_ON_5);
    let outcome = add_packet(&"2+2+1".parse().unwrap(), 2).unwrap();
    assert_eq!(outcome.gallery(), TWO_PACKET_ON_221);
}

#[test]
fn one_point_results_by_source() {
    let expected = [
        ("5", vec!["5+1", "6"]),
        ("4+1", vec!["4+1+1", "5+1", "4+2"]),
        ("3+2", vec!["3+2+1", "4+2", "3+3"]),
        ("3+1+1", vec!["3+1+1+1", "4+1+1", "3+2+1"]),
        ("2+2+1", vec!["2+2+1+1", "3+2+1", "2+2+2"]),
        ("2+1+1+1", vec!["2+1+1+1+1", "3+1+1+1", "2+2+1+1"]),
        ("1+1+1+1+1", vec!["1+1+1+1+1+1", "2+1+1+1+1"]),
    ];
    let sources: Vec<Partition> = enumerate_partitions(5, cap()).unwrap().collect();
    assert_eq!(sources.len(), expected.len());
    let mut total = 0;
    for (p, (label, results)) in sources.iter().zip(expected) {
        assert_eq!(p.to_string(), label);
        let got: Vec<String> = add_packet(p, 1).unwrap().results.iter().map(|r| r.partition().to_string()).collect();
        assert_eq!(got, results);
        total += got.len();
    }
    assert_eq!(total, 19);
}

#[test]
fn packet_count_identity_grid() {
    for n in 0..=30u64 {
        for k in 1..=6u64 {
            let count = count_new_partitions(n, k, cap()).unwrap();
            let via_elder = partition_number(n as i64) + v_count(k, n as i64).unwrap();
            assert_eq!(count, via_elder, "n={n} k={k}");
            assert_eq!(count, q_count(k, (n + k) as i64).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn every_result_strips_back_to_its_source() {
    for n in 0..=12 {
        for p in enumerate_partitions(n, cap()).unwrap() {
            for k in 1..=4 {
                for r in add_packet(&p, k).unwrap().results {
                    assert_eq!(r.diagram.source(), p);
                    assert_eq!(r.partition().n(), n + k);
                }
            }
        }
    }
}

#[test]
fn empty_diagram_renders_nothing() {
    assert_eq!(FerrersDiagram::new(Partition::empty()).render(), "");
    assert_eq!(partitions_gallery(0, cap()).unwrap(), "()\n");
}
