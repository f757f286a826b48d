//! Lists the LC, PLR and CP item sets of G1 and shows how PLR and CP items
//! stand for several LC items at once.

use std::collections::BTreeMap;

use leftcorner::corpus::g1;
use leftcorner::items::{cp_items, lc_items, plr_items, CpItem, Item};
use leftcorner::render::{render_item, render_lc};

fn main() {
    let g = g1();
    let lc = lc_items(&g);
    let plr = plr_items(&g);
    let cp = cp_items(&g);
    println!("|LC| = {}, |PLR| = {}, |CP| = {}", lc.len(), plr.len(), cp.len());

    let mut by_plr: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut by_cp: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for it in &lc {
        let lc_text = render_lc(&g, it);
        let plr_item = it.to_plr(&g);
        by_plr
            .entry(render_item(&g, &Item::Plr(plr_item)))
            .or_default()
            .push(lc_text.clone());
        let cp_item = CpItem { prefix: plr_item.prefix };
        by_cp.entry(render_item(&g, &Item::Cp(cp_item))).or_default().push(lc_text);
    }

    println!("\nPLR items covering more than one LC item:");
    for (plr, lcs) in by_plr.iter().filter(|(_, v)| v.len() > 1) {
        println!("  {plr:<16} {}", lcs.join(" "));
    }
    println!("\nCP items covering more than one LC item:");
    for (cp, lcs) in by_cp.iter().filter(|(_, v)| v.len() > 1) {
        println!("  {cp:<16} {}", lcs.join(" "));
    }
}
