/* Separate-chaining hash map from int keys to int values, with 8 buckets. */

struct Entry {
    int key;
    int value;
    struct Entry *next;
};

struct Map {
    struct Entry *b0;
    struct Entry *b1;
    struct Entry *b2;
    struct Entry *b3;
    struct Entry *b4;
    struct Entry *b5;
    struct Entry *b6;
    struct Entry *b7;
    int size;
};

int hash_key(int key) {
    int h = key * 31 + 7;
    if (h < 0) {
        h = -h;
    }
    return h % 8;
}

void map_init(struct Map *m) {
    m->b0 = NULL;
    m->b1 = NULL;
    m->b2 = NULL;
    m->b3 = NULL;
    m->b4 = NULL;
    m->b5 = NULL;
    m->b6 = NULL;
    m->b7 = NULL;
    m->size = 0;
}

struct Entry *bucket(struct Map *m, int index) {
    if (index == 0) return m->b0;
    if (index == 1) return m->b1;
    if (index == 2) return m->b2;
    if (index == 3) return m->b3;
    if (index == 4) return m->b4;
    if (index == 5) return m->b5;
    if (index == 6) return m->b6;
    return m->b7;
}

void set_bucket(struct Map *m, int index, struct Entry *e) {
    if (index == 0) m->b0 = e;
    else if (index == 1) m->b1 = e;
    else if (index == 2) m->b2 = e;
    else if (index == 3) m->b3 = e;
    else if (index == 4) m->b4 = e;
    else if (index == 5) m->b5 = e;
    else if (index == 6) m->b6 = e;
    else m->b7 = e;
}

struct Entry *map_lookup(struct Map *m, int key) {
    struct Entry *e = bucket(m, hash_key(key));
    while (e != NULL) {
        if (e->key == key) {
            return e;
        }
        e = e->next;
    }
    return NULL;
}

int map_get(struct Map *m, int key, int fallback) {
    struct Entry *e = map_lookup(m, key);
    return e != NULL ? e->value : fallback;
}

void map_put(struct Map *m, int key, int value) {
    int index = hash_key(key);
    struct Entry *e = map_lookup(m, key);
    if (e != NULL) {
        e->value = value;
        return;
    }
    e = malloc(24);
    e->key = key;
    e->value = value;
    e->next = bucket(m, index);
    set_bucket(m, index, e);
    m->size = m->size + 1;
}

int map_remove(struct Map *m, int key) {
    int index = hash_key(key);
    struct Entry *e = bucket(m, index);
    struct Entry *prev = NULL;
    while (e != NULL && e->key != key) {
        prev = e;
        e = e->next;
    }
    if (e == NULL) {
        return 0;
    }
    if (prev == NULL) {
        set_bucket(m, index, e->next);
    } else {
        prev->next = e->next;
    }
    free(e);
    m->size = m->size - 1;
    return 1;
}

int histogram_mode(char *text) {
    struct Map m;
    char *p = text;
    int best = 0;
    int best_count = 0;
    int count;
    map_init(&m);
    while (*p != 0) {
        count = map_get(&m, *p, 0) + 1;
        map_put(&m, *p, count);
        if (count > best_count) {
            best_count = count;
            best = *p;
        }
        p = p + 1;
    }
    return best;
}
