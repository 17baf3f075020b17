#pragma once

// Built-in starter lists used when no stopword or gazetteer file is given.
// Both are replaceable data, not exhaustive references.

#include <array>
#include <string_view>

#include "triage/geo_tagger.hpp"
#include "triage/textprep.hpp"

namespace triage {

inline constexpr std::array<std::string_view, 137> kDefaultStopwords{
    // English
    "a", "about", "after", "all", "also", "am", "an", "and", "any", "are", "as", "at", "be", "been", "before",
    "being", "but", "by", "can", "could", "did", "do", "does", "for", "from", "had", "has", "have", "he", "her",
    "here", "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "just", "me", "my", "no", "not",
    "now", "of", "on", "or", "our", "out", "over", "she", "so", "some", "than", "that", "the", "their", "them",
    "then", "there", "these", "they", "this", "to", "too", "up", "us", "very", "was", "we", "were", "what",
    "when", "where", "which", "who", "will", "with", "would", "you", "your", "rt", "amp", "via",
    // Filipino
    "ang", "ng", "sa", "na", "mga", "si", "ni", "kay", "ay", "ko", "mo", "ka", "ako", "ikaw", "siya",
    "kami", "tayo", "kayo", "sila", "ito", "iyan", "iyon", "yan", "yun", "yung", "dito", "diyan", "doon", "po",
    "opo", "lang", "din", "rin", "pa", "ba", "naman", "nga", "kasi", "pero", "kung", "para", "may", "nang",
    "pag", "kapag", "nasa", "ngayon", "sana", "daw", "raw"};

inline constexpr std::array<std::string_view, 96> kDefaultGazetteer{
    "Metro Manila", "Manila", "Quezon City", "Makati", "Pasig", "Marikina", "Taguig", "Caloocan", "Pasay",
    "Parañaque", "Las Piñas", "Muntinlupa", "Malabon", "Navotas", "Valenzuela", "San Juan", "Mandaluyong",
    "Pateros", "Bulacan", "Pampanga", "Tarlac", "Nueva Ecija", "Pangasinan", "Zambales", "Bataan", "Rizal",
    "Cavite", "Laguna", "Batangas", "Quezon", "Aurora", "Isabela", "Cagayan", "Nueva Vizcaya", "Quirino",
    "Baguio", "Benguet", "Ifugao", "Mountain Province", "Kalinga", "Apayao", "Abra", "Ilocos Norte",
    "Ilocos Sur", "La Union", "Palawan", "Puerto Princesa", "Coron", "Oriental Mindoro", "Occidental Mindoro",
    "Marinduque", "Romblon", "Masbate", "Albay", "Legazpi", "Sorsogon", "Camarines Sur", "Camarines Norte",
    "Naga", "Catanduanes", "Leyte", "Tacloban", "Ormoc", "Palo", "Tanauan", "Southern Leyte", "Samar",
    "Eastern Samar", "Northern Samar", "Guiuan", "Biliran", "Cebu", "Cebu City", "Bohol", "Iloilo", "Capiz",
    "Roxas City", "Aklan", "Antique", "Guimaras", "Negros Occidental", "Negros Oriental", "Bacolod", "Siquijor",
    "Davao", "Davao City", "Cagayan de Oro", "Bukidnon", "Iligan", "Marawi", "Cotabato", "General Santos",
    "Zamboanga", "Butuan", "Surigao", "Siargao"};

inline StopwordList default_stopwords() { return StopwordList::from(kDefaultStopwords); }

inline Gazetteer default_gazetteer() {
  Gazetteer g;
  for (auto name : kDefaultGazetteer) g.add(name);
  return g;
}

}  // namespace triage
