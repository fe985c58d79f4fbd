#pragma once

#include <json.hpp>

#include "newsscope/corpus_store.hpp"
#include "newsscope/features.hpp"

namespace newsscope {

void to_json(nlohmann::json& j, const Date& d);
void from_json(const nlohmann::json& j, Date& d);

void to_json(nlohmann::json& j, const Article& a);
void from_json(const nlohmann::json& j, Article& a);

void to_json(nlohmann::json& j, const EntityMention& m);
void from_json(const nlohmann::json& j, EntityMention& m);

void to_json(nlohmann::json& j, const FeatureSet& f);
void from_json(const nlohmann::json& j, FeatureSet& f);

void to_json(nlohmann::json& j, const SiteCount& s);
void from_json(const nlohmann::json& j, SiteCount& s);

void to_json(nlohmann::json& j, const StoreManifest& m);
void from_json(const nlohmann::json& j, StoreManifest& m);

void to_json(nlohmann::json& j, const IngestReport& r);

nlohmann::json emotion_to_json(const EmotionVector& v);

}  // namespace newsscope
