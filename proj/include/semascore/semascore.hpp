// Convenience umbrella: the whole corpus-to-scores engine in one include.
#pragma once

#include "semascore/centrality.hpp"
#include "semascore/corpus.hpp"
#include "semascore/error.hpp"
#include "semascore/exports.hpp"
#include "semascore/graph.hpp"
#include "semascore/imagery.hpp"
#include "semascore/keywords.hpp"
#include "semascore/parallel.hpp"
#include "semascore/pipeline.hpp"
#include "semascore/score.hpp"
#include "semascore/stemmer.hpp"
#include "semascore/text.hpp"
#include "semascore/timebin.hpp"
