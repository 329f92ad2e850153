use std::path::PathBuf;

fn book_src() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../book/src")
}

#[test]
fn every_chapter_in_the_summary_exists_and_is_tested() {
    let summary = std::fs::read_to_string(book_src().join("SUMMARY.md")).unwrap();
    let lib = include_str!("../src/lib.rs");
    let chapters: Vec<&str> = summary
        .split("](")
        .skip(1)
        .map(|rest| &rest[..rest.find(')').unwrap()])
        .collect();
    assert_eq!(chapters.len(), 8);
    for chapter in chapters {
        assert!(book_src().join(chapter).is_file(), "{chapter}");
        assert!(
            lib.contains(&format!("book/src/{chapter}")),
            "{chapter} is not compiled"
        );
    }
}

#[test]
fn file_format_listing_matches_the_fixture() {
    let chapter = std::fs::read_to_string(book_src().join("cli.md")).unwrap();
    let start = chapter.find("```text\n").unwrap() + "```text\n".len();
    let listing = &chapter[start..start + chapter[start..].find("```").unwrap()];
    let fixture = hopfcleft::cli::resolve_path("kc2").unwrap();
    assert_eq!(listing, std::fs::read_to_string(fixture).unwrap());
    let parsed = hopfcleft::cli::format::DefinitionFile::parse(listing).unwrap();
    assert_eq!(parsed.serialize(), listing);
}
