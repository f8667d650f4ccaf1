/* Least-recently-used cache of int pairs, kept as a doubly linked list. */

struct Slot {
    int key;
    int value;
    struct Slot *prev;
    struct Slot *next;
};

struct Cache {
    struct Slot *front;
    struct Slot *back;
    int size;
    int limit;
    int hits;
    int misses;
};

void cache_init(struct Cache *c, int limit) {
    c->front = NULL;
    c->back = NULL;
    c->size = 0;
    c->limit = limit;
    c->hits = 0;
    c->misses = 0;
}

void cache_unlink(struct Cache *c, struct Slot *s) {
    if (s->prev != NULL) {
        s->prev->next = s->next;
    } else {
        c->front = s->next;
    }
    if (s->next != NULL) {
        s->next->prev = s->prev;
    } else {
        c->back = s->prev;
    }
    s->prev = NULL;
    s->next = NULL;
}

void cache_push_front(struct Cache *c, struct Slot *s) {
    s->prev = NULL;
    s->next = c->front;
    if (c->front != NULL) {
        c->front->prev = s;
    }
    c->front = s;
    if (c->back == NULL) {
        c->back = s;
    }
}

struct Slot *cache_find(struct Cache *c, int key) {
    struct Slot *s = c->front;
    while (s != NULL) {
        if (s->key == key) {
            return s;
        }
        s = s->next;
    }
    return NULL;
}

int cache_get(struct Cache *c, int key, int *value) {
    struct Slot *s = cache_find(c, key);
    if (s == NULL) {
        c->misses = c->misses + 1;
        return 0;
    }
    c->hits = c->hits + 1;
    cache_unlink(c, s);
    cache_push_front(c, s);
    *value = s->value;
    return 1;
}

void cache_evict(struct Cache *c) {
    struct Slot *victim = c->back;
    if (victim == NULL) {
        return;
    }
    cache_unlink(c, victim);
    free(victim);
    c->size = c->size - 1;
}

void cache_put(struct Cache *c, int key, int value) {
    struct Slot *s = cache_find(c, key);
    if (s != NULL) {
        s->value = value;
        cache_unlink(c, s);
        cache_push_front(c, s);
        return;
    }
    if (c->size >= c->limit) {
        cache_evict(c);
    }
    s = malloc(32);
    s->key = key;
    s->value = value;
    cache_push_front(c, s);
    c->size = c->size + 1;
}

int cache_hit_rate(struct Cache *c) {
    int total = c->hits + c->misses;
    return total == 0 ? 0 : 100 * c->hits / total;
}

int slow_square(int x) {
    int r = 0;
    int i;
    for (i = 0; i < x; i = i + 1) {
        r = r + x;
    }
    return r;
}

int cached_square(struct Cache *c, int x) {
    int v = 0;
    if (cache_get(c, x, &v)) {
        return v;
    }
    v = slow_square(x);
    cache_put(c, x, v);
    return v;
}
