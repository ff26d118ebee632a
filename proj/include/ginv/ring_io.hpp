#pragma once

// Ring spec documents:
//   {"kind": "Zn",      "n": 6,            "involution": "identity"}
//   {"kind": "MatZp",   "k": 2, "p": 2,    "involution": "transpose"}
//   {"kind": "MatQ(i)", "n": 2,            "involution": "conjugate-transpose"}
//   {"kind": "Toeplitz", "band_bound": 4, "corr_bound": 4, "involution": "transpose"}
//   {"kind": "Product", "factors": [ ...ring specs... ]}
// The involution field is optional and validated against the backend.
// Element documents reference the ring by id: {"ring_id": "...", ...payload}.

#include <string>

#include "ginv/star_ring.hpp"

namespace ginv {

RingPtr ring_from_spec(const json& spec);
RingPtr ring_from_spec_file(const std::string& path);

json ring_to_spec(const RingPtr& ring);

// {"ring_id": ..., payload...}; ring_id must match.
Element element_from_doc(const RingPtr& ring, const json& doc);
json element_to_doc(const Element& a);

json load_json_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace ginv
