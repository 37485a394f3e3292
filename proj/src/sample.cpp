#include "ale/sample.hpp"

// All of the sampler is header-inline; this translation unit anchors it in
// the library.
