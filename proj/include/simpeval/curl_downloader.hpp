#pragma once

// libcurl-backed Downloader for datasets::fetch. Kept out of datasets.hpp so
// that only code which actually downloads needs to link libcurl.

#include <cstdio>
#include <filesystem>
#include <string>

#include <curl/curl.h>

#include "simpeval/datasets.hpp"
#include "simpeval/error.hpp"

namespace simpeval {

inline Downloader curl_downloader(long timeout_seconds = 300) {
    return [timeout_seconds](const std::string& url, const fs::path& destination) {
        std::FILE* out = std::fopen(destination.c_str(), "wb");
        if (!out) throw IoError("cannot write '" + destination.string() + "'");
        CURL* curl = curl_easy_init();
        if (!curl) {
            std::fclose(out);
            throw FetchError("cannot initialise libcurl");
        }
        char errbuf[CURL_ERROR_SIZE] = {0};
        curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
        curl_easy_setopt(curl, CURLOPT_WRITEDATA, out);
        curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
        curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
        curl_easy_setopt(curl, CURLOPT_TIMEOUT, timeout_seconds);
        curl_easy_setopt(curl, CURLOPT_ERRORBUFFER, errbuf);
        const CURLcode rc = curl_easy_perform(curl);
        curl_easy_cleanup(curl);
        const bool closed = std::fclose(out) == 0;
        if (rc != CURLE_OK) {
            throw FetchError("download of '" + url + "' failed: " + (errbuf[0] ? errbuf : curl_easy_strerror(rc)));
        }
        if (!closed) throw IoError("error writing '" + destination.string() + "'");
    };
}

}  // namespace simpeval
