#pragma once

#include "triage/config.hpp"
#include "triage/error.hpp"
#include "triage/eval.hpp"
#include "triage/geo_tagger.hpp"
#include "triage/io.hpp"
#include "triage/needs_svm.hpp"
#include "triage/persistence.hpp"
#include "triage/pipeline.hpp"
#include "triage/relevance_nb.hpp"
#include "triage/resources.hpp"
#include "triage/smo.hpp"
#include "triage/sparse.hpp"
#include "triage/spatiotemporal.hpp"
#include "triage/sweep.hpp"
#include "triage/textprep.hpp"
#include "triage/timeutil.hpp"
#include "triage/topic_incremental.hpp"
#include "triage/types.hpp"
