//! JSON interchange documents.
//!
//! Subsets are written as comma-joined symbols in ground order, with the
//! empty string for the empty set. Every writer emits canonical order, so
//! identical inputs give byte-identical output.

use plott::{
    ChoiceFunction, ConvexFamily, GroundSet, PartialOrder, PlottError, SetMap, SimpleWord, Subset,
    WordSet,
};
use serde_json::{json, Map, Value};

use crate::CliError;

/// A loaded document of any kind.
#[derive(Clone, Debug)]
pub enum Document {
    Choice(ChoiceFunction),
    Map(SetMap),
    Words(WordSet),
    Order(PartialOrder),
    Family(ConvexFamily),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Choice(_) => "choice",
            Document::Map(_) => "map",
            Document::Words(_) => "words",
            Document::Order(_) => "order",
            Document::Family(_) => "family",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Document::Choice(f) => choice_json(f),
            Document::Map(m) => map_json(m),
            Document::Words(w) => words_json(w),
            Document::Order(o) => order_json(o),
            Document::Family(f) => family_json(f),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Plott(PlottError::Invalid(msg.into()))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| invalid(format!("missing field {key:?}")))
}

fn string_list(value: &Value, what: &str) -> Result<Vec<String>, CliError> {
    let items = value
        .as_array()
        .ok_or_else(|| invalid(format!("{what} must be an array")))?;
    items
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| invalid(format!("{what} entries must be strings")))
        })
        .collect()
}

/// Reads a symbol list, rejecting symbols that would break subset keys.
pub fn load_ground(value: &Value, cap: usize) -> Result<GroundSet, CliError> {
    let symbols = string_list(value, "ground")?;
    if let Some(bad) = symbols.iter().find(|s| s.contains(',') || s.contains('"')) {
        return Err(invalid(format!("symbol {bad:?} contains a comma or quote")));
    }
    Ok(GroundSet::with_cap(symbols, cap)?)
}

pub fn subset_key(ground: &GroundSet, s: Subset) -> String {
    ground.names(s).join(",")
}

pub fn parse_key(ground: &GroundSet, key: &str) -> Result<Subset, CliError> {
    if key.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let parts: Vec<&str> = key.split(',').collect();
    let mut seen = Subset::EMPTY;
    for p in parts {
        let i = ground
            .index_of(p)
            .ok_or_else(|| invalid(format!("unknown symbol {p:?} in {key:?}")))?;
        if seen.contains(i) {
            return Err(invalid(format!("repeated symbol {p:?} in {key:?}")));
        }
        seen = seen.with(i);
    }
    Ok(seen)
}

fn ground_json(ground: &GroundSet) -> Value {
    json!(ground.symbols())
}

pub fn choice_json(f: &ChoiceFunction) -> Value {
    let g = f.ground();
    let mut table = Map::new();
    for a in g.subsets().filter(|a| !a.is_empty()) {
        table.insert(subset_key(g, a), json!(subset_key(g, f.at(a))));
    }
    json!({ "ground": ground_json(g), "choice": table })
}

pub fn map_json(m: &SetMap) -> Value {
    let mut images = Map::new();
    for x in 0..m.source().len() {
        images.insert(
            m.source().symbol(x).to_string(),
            json!(m.target().symbol(m.apply(x))),
        );
    }
    json!({
        "source": ground_json(m.source()),
        "target": ground_json(m.target()),
        "map": images,
    })
}

pub fn words_json(ws: &WordSet) -> Value {
    let list: Vec<Value> = ws.iter().map(|w| json!(w.symbols())).collect();
    json!({ "ground": ground_json(ws.ground()), "words": list })
}

pub fn order_json(o: &PartialOrder) -> Value {
    let g = o.ground();
    let covers: Vec<Value> = o
        .covers()
        .into_iter()
        .map(|(hi, lo)| json!([g.symbol(hi), g.symbol(lo)]))
        .collect();
    json!({ "ground": ground_json(g), "covers": covers })
}

pub fn family_json(f: &ConvexFamily) -> Value {
    let g = f.ground();
    let members: Vec<Value> = f
        .members()
        .iter()
        .map(|&m| json!(subset_key(g, m)))
        .collect();
    json!({ "ground": ground_json(g), "members": members })
}

fn load_choice(obj: &Map<String, Value>, cap: usize) -> Result<ChoiceFunction, CliError> {
    let ground = load_ground(field(obj, "ground")?, cap)?;
    let entries = field(obj, "choice")?
        .as_object()
        .ok_or_else(|| invalid("choice must be an object"))?;
    let mut table = vec![None; ground.power_len()];
    table[0] = Some(Subset::EMPTY);
    for (key, value) in entries {
        let menu = parse_key(&ground, key)?;
        let chosen = value
            .as_str()
            .ok_or_else(|| invalid(format!("choice from {key:?} must be a string")))?;
        let chosen = parse_key(&ground, chosen)?;
        let slot = &mut table[menu.bits() as usize];
        if menu.is_empty() {
            if !chosen.is_empty() {
                return Err(invalid("the empty menu must choose nothing"));
            }
        } else if slot.replace(chosen).is_some() {
            return Err(invalid(format!("menu {key:?} listed twice")));
        }
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(bits, slot)| {
            slot.ok_or_else(|| {
                let key = subset_key(&ground, Subset::from_bits(bits as u32));
                invalid(format!("missing menu {key:?}"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ChoiceFunction::from_table(&ground, table)?)
}

fn load_map(obj: &Map<String, Value>, cap: usize) -> Result<SetMap, CliError> {
    let source = load_ground(field(obj, "source")?, cap)?;
    let target = load_ground(field(obj, "target")?, cap)?;
    let entries = field(obj, "map")?
        .as_object()
        .ok_or_else(|| invalid("map must be an object"))?;
    let pairs = entries
        .iter()
        .map(|(k, v)| {
            v.as_str()
                .map(|t| (k.as_str(), t))
                .ok_or_else(|| invalid(format!("image of {k:?} must be a string")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SetMap::from_pairs(&source, &target, pairs)?)
}

fn load_words(obj: &Map<String, Value>, cap: usize) -> Result<WordSet, CliError> {
    let ground = load_ground(field(obj, "ground")?, cap)?;
    let list = field(obj, "words")?
        .as_array()
        .ok_or_else(|| invalid("words must be an array"))?;
    let words = list
        .iter()
        .map(|w| {
            let symbols = string_list(w, "word")?;
            Ok(SimpleWord::from_symbols(
                &ground,
                symbols.iter().map(String::as_str),
            )?)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let set = WordSet::new(&ground, words)?;
    if set.len() != list.len() {
        return Err(invalid("duplicate word"));
    }
    Ok(set)
}

fn load_order(obj: &Map<String, Value>, cap: usize) -> Result<PartialOrder, CliError> {
    let ground = load_ground(field(obj, "ground")?, cap)?;
    let list = field(obj, "covers")?
        .as_array()
        .ok_or_else(|| invalid("covers must be an array"))?;
    let pairs = list
        .iter()
        .map(|p| {
            let pair = string_list(p, "cover")?;
            match pair.as_slice() {
                [hi, lo] => Ok((hi.clone(), lo.clone())),
                _ => Err(invalid("each cover must be a pair [upper, lower]")),
            }
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(PartialOrder::from_symbol_relations(
        &ground,
        pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())),
    )?)
}

fn load_family(obj: &Map<String, Value>, cap: usize) -> Result<ConvexFamily, CliError> {
    let ground = load_ground(field(obj, "ground")?, cap)?;
    let keys = string_list(field(obj, "members")?, "members")?;
    let members = keys
        .iter()
        .map(|k| parse_key(&ground, k))
        .collect::<Result<Vec<_>, _>>()?;
    let family = ConvexFamily::new(&ground, members)?;
    if family.len() != keys.len() {
        return Err(invalid("duplicate member"));
    }
    Ok(family)
}

/// Parses and validates a document, recognizing its kind by its payload key.
pub fn load(text: &str, cap: usize) -> Result<Document, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| invalid("document must be a JSON object"))?;
    if obj.contains_key("choice") {
        Ok(Document::Choice(load_choice(obj, cap)?))
    } else if obj.contains_key("map") {
        Ok(Document::Map(load_map(obj, cap)?))
    } else if obj.contains_key("words") {
        Ok(Document::Words(load_words(obj, cap)?))
    } else if obj.contains_key("covers") {
        Ok(Document::Order(load_order(obj, cap)?))
    } else if obj.contains_key("members") {
        Ok(Document::Family(load_family(obj, cap)?))
    } else {
        Err(invalid(
            "unrecognized document: expected one of choice, map, words, covers, members",
        ))
    }
}

/// A bare `{"ground": [...]}` document.
pub fn load_ground_document(text: &str, cap: usize) -> Result<GroundSet, CliError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))?;
    let ground = value
        .get("ground")
        .ok_or_else(|| invalid("missing field \"ground\""))?;
    load_ground(ground, cap)
}
