#pragma once

#include "canvas_color/embed.hpp"
#include "canvas_color/canvas.hpp"
#include "canvas_color/oracle.hpp"
#include "canvas_color/thomassen.hpp"
#include "canvas_color/demtwo.hpp"
#include "canvas_color/harness/generate.hpp"
#include "canvas_color/harness/io.hpp"
#include "canvas_color/harness/corpus.hpp"
#include "canvas_color/harness/check.hpp"
